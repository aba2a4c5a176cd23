#include <doctest.h>

#include <functional>
#include <random>

#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "linalg.hpp"

using namespace resjoin;

namespace {

bool fails_with(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

SymMatrix sym2(double a, double b, double c) {
    SymMatrix m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, c);
    return m;
}

} // namespace

TEST_CASE("solve_spd") {
    Matrix b(3, 2);
    b(0, 0) = 1; b(1, 0) = -2; b(2, 1) = 5;
    const Matrix x = solve_spd(SymMatrix::from_matrix(Matrix::identity(3)), b);
    CHECK((x - b).max_abs() == doctest::Approx(0.0).epsilon(1e-15));

    // [[5,-1],[-1,5]]^{-1} = (1/24) [[5,1],[1,5]]
    const Matrix inv = solve_spd(sym2(5, -1, 5), Matrix::identity(2));
    CHECK(inv(0, 0) == doctest::Approx(5.0 / 24));
    CHECK(inv(0, 1) == doctest::Approx(1.0 / 24));
    CHECK(inv(1, 1) == doctest::Approx(5.0 / 24));

    CHECK(fails_with(ErrorCode::NotPositiveDefinite,
                     [] { solve_spd(sym2(1, 2, 1), Matrix::identity(2)); }));
}

TEST_CASE("laplacian pseudoinverse basics") {
    const SymMatrix pk2 = laplacian_pseudoinverse(Graph::complete(2).laplacian());
    CHECK(pk2(0, 0) == doctest::Approx(0.25));
    CHECK(pk2(0, 1) == doctest::Approx(-0.25));
    CHECK(pk2(0, 0) + pk2(1, 1) - 2 * pk2(0, 1) == doctest::Approx(1.0)); // r_12 of K2

    const SymMatrix pc4 = laplacian_pseudoinverse(Graph::cycle(4).laplacian());
    CHECK(pc4(0, 0) + pc4(1, 1) - 2 * pc4(0, 1) == doctest::Approx(0.75)); // series-parallel 1*3/4
    CHECK(pc4(0, 0) + pc4(2, 2) - 2 * pc4(0, 2) == doctest::Approx(1.0));  // 2*2/4

    // row sums of the pseudoinverse vanish
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += pc4(i, j);
        CHECK(row == doctest::Approx(0.0).epsilon(1e-12));
    }

    const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(fails_with(ErrorCode::Disconnected,
                     [&] { laplacian_pseudoinverse(two_k2.laplacian()); }));
    CHECK(fails_with(ErrorCode::NotLaplacian, [] {
        laplacian_pseudoinverse(SymMatrix::from_matrix(Matrix::identity(3)));
    }));
}

TEST_CASE("laplacian pseudoinverse satisfies the Penrose equations") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> pick(2, 60);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_connected_graph(pick(rng), 0.4, rng);
        const SymMatrix l = g.laplacian();
        const SymMatrix p = laplacian_pseudoinverse(l);
        CHECK(penrose_deviation(l.to_matrix(), p.to_matrix()) <= 1e-9);
    }
}

TEST_CASE("one_inverse_blocks on the path split at its middle vertex") {
    // P3 is C(K2): ends are the original K2 vertices, the middle vertex the
    // subdivision vertex, so L3 is the 1x1 block [2].
    SymMatrix l1(2);
    l1.set(0, 0, 1.0);
    l1.set(1, 1, 1.0);
    Matrix l2(2, 1);
    l2(0, 0) = -1.0;
    l2(1, 0) = -1.0;
    SymMatrix l3(1);
    l3.set(0, 0, 2.0);

    const BlockOneInverse x = one_inverse_blocks(l1, l2, l3);
    const Matrix& tl = x.top_left;
    CHECK(tl(0, 0) + tl(1, 1) - 2 * tl(0, 1) == doctest::Approx(2.0)); // two resistors in series

    const SymMatrix full = x.assemble();
    const Matrix l = central(Graph::complete(2)).graph.laplacian().to_matrix();
    CHECK((l * full.to_matrix() * l - l).max_abs() <= 1e-12);
}

TEST_CASE("one_inverse_blocks matches the oracle on C(C3)") {
    const Graph c3 = Graph::cycle(3);
    const LabeledJoinGraph c = central(c3);
    const SymMatrix l = c.graph.laplacian();
    const int n = 3, m = 3;

    Matrix l1(n, n), l2(n, m), l3m(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l1(i, j) = l(i, j);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) l2(i, k) = l(i, n + k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) l3m(i, j) = l(n + i, n + j);
    CHECK(l3m(0, 0) == 2.0); // subdivision block is 2I

    const BlockOneInverse blocks =
        one_inverse_blocks(SymMatrix::from_matrix(l1), l2, SymMatrix::from_matrix(l3m));
    const SymMatrix x = blocks.assemble();

    const SymMatrix pinv = laplacian_pseudoinverse(l); // C(C3) = C6
    double kf = 0.0, worst = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const double from_block = x(i, i) + x(j, j) - 2 * x(i, j);
            const double from_pinv = pinv(i, i) + pinv(j, j) - 2 * pinv(i, j);
            worst = std::max(worst, std::fabs(from_block - from_pinv));
            kf += from_block;
        }
    CHECK(worst <= 1e-9);
    CHECK(kf == doctest::Approx(17.5));
}

TEST_CASE("one_inverse_blocks error paths") {
    // nonzero row sum: the assembled matrix is no Laplacian
    SymMatrix l1(1);
    l1.set(0, 0, 2.0);
    Matrix l2(1, 1);
    l2(0, 0) = -1.0;
    SymMatrix l3(1);
    l3.set(0, 0, 2.0);
    CHECK(fails_with(ErrorCode::NotLaplacian, [&] { one_inverse_blocks(l1, l2, l3); }));

    // zero-degree row inside L3 keeps row sums zero but makes L3 singular
    SymMatrix l1b(1);
    l1b.set(0, 0, 1.0);
    Matrix l2b(1, 2);
    l2b(0, 0) = -1.0;
    l2b(0, 1) = 0.0;
    SymMatrix l3b(2);
    l3b.set(0, 0, 1.0); // second row all zero
    CHECK(fails_with(ErrorCode::SingularL3, [&] { one_inverse_blocks(l1b, l2b, l3b); }));
}

TEST_CASE("one_inverse_blocks contract on random partitions") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> pick(4, 24);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_connected_graph(pick(rng), 0.5, rng);
        const int n = g.order();
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<int> split(1, n - 1);
        const int n1 = split(rng);

        const SymMatrix l = g.laplacian();
        Matrix perm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) perm(i, j) = l(order[i], order[j]);
        const BlockOneInverse blocks = one_inverse_blocks(
            SymMatrix::from_matrix(perm.block(0, 0, n1, n1)), perm.block(0, n1, n1, n - n1),
            SymMatrix::from_matrix(perm.block(n1, n1, n - n1, n - n1)));
        const Matrix x = blocks.assemble().to_matrix();
        REQUIRE((perm * x * perm - perm).max_abs() <= 1e-9);

        // resistances from the {1}-inverse agree with the pseudoinverse route
        const SymMatrix pinv = laplacian_pseudoinverse(l);
        double worst = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const double via_block = x(a, a) + x(b, b) - x(a, b) - x(b, a);
                const double via_pinv = pinv(order[a], order[a]) + pinv(order[b], order[b]) -
                                        2 * pinv(order[a], order[b]);
                worst = std::max(worst, std::fabs(via_block - via_pinv));
            }
        REQUIRE(worst <= 1e-9);
    }
}

TEST_CASE("shifted pseudoinverse") {
    const Graph c4 = Graph::cycle(4);
    const SymMatrix l = c4.laplacian();
    const int n = 4;

    SUBCASE("matches the explicit expression and the Penrose equations") {
        const SymMatrix x = shifted_laplacian_pseudoinverse(-0.5, 4.0, l);
        Matrix direct = -0.5 * l.to_matrix() + 4.0 * Matrix::identity(n);
        direct = LuFactor(direct, ErrorCode::SingularShift).inverse();
        direct -= Matrix::ones(n, n, 1.0 / 16.0);
        CHECK((x.to_matrix() - direct).max_abs() <= 1e-12);

        Matrix target = -0.5 * l.to_matrix() + 4.0 * Matrix::identity(n) -
                        Matrix::ones(n, n, 1.0);
        CHECK(penrose_deviation(target, x.to_matrix()) <= 1e-9);
    }

    SUBCASE("edgeless graph gives the centering projector") {
        const SymMatrix zero(3);
        const SymMatrix x = shifted_laplacian_pseudoinverse(1.0, 1.0, zero);
        const Matrix expected = Matrix::identity(3) - Matrix::ones(3, 3, 1.0 / 3.0);
        CHECK((x.to_matrix() - expected).max_abs() <= 1e-12);
        CHECK(penrose_deviation(expected, x.to_matrix()) <= 1e-12); // projectors are idempotent
    }

    SUBCASE("indefinite shift is handled") {
        const SymMatrix lk3 = Graph::complete(3).laplacian();
        const SymMatrix x = shifted_laplacian_pseudoinverse(-0.5, 1.0, lk3);
        Matrix target = -0.5 * lk3.to_matrix() + Matrix::identity(3) -
                        Matrix::ones(3, 3, 1.0 / 3.0);
        CHECK(penrose_deviation(target, x.to_matrix()) <= 1e-9);
    }

    SUBCASE("errors") {
        CHECK(fails_with(ErrorCode::BadParams,
                         [&] { shifted_laplacian_pseudoinverse(0.0, 1.0, l); }));
        // -L(K2)/2 + I has eigenvalue 0: singular shift
        const SymMatrix lk2 = Graph::complete(2).laplacian();
        CHECK(fails_with(ErrorCode::SingularShift,
                         [&] { shifted_laplacian_pseudoinverse(-0.5, 1.0, lk2); }));
    }
}

TEST_CASE("symmetry contract") {
    Matrix slightly(2, 2);
    slightly(0, 1) = 1.0;
    slightly(1, 0) = 1.0 + 1e-13;
    const SymMatrix averaged = SymMatrix::from_matrix(slightly);
    CHECK(averaged(0, 1) == doctest::Approx(1.0 + 0.5e-13));

    Matrix broken(2, 2);
    broken(0, 1) = 1.0;
    broken(1, 0) = 1.0 + 1e-11;
    CHECK(fails_with(ErrorCode::NotSymmetric, [&] { SymMatrix::from_matrix(broken); }));
}
