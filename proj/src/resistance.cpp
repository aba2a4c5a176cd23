#include "resistance.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace resjoin {

namespace testing {
double engine_fault_offset = 0.0;
} // namespace testing

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!g.is_connected()) fail(ErrorCode::Disconnected, std::string(what) + " must be connected");
}

SymMatrix resistance_from_pinv(const SymMatrix& pinv) {
    const std::size_t n = pinv.dim();
    SymMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            r.set(i, j, pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j));
    return r;
}

Matrix spd_inverse(const SymMatrix& a) { return CholeskyFactor(a).inverse(); }

// Incident case of the recursion: subdivision vertex of pq against vertex j,
// from already-known values among original (and G2) vertices.
double incident_case(double r_pj, double r_qj, double r_pq) {
    return 0.5 * (1.0 + r_pj + r_qj - 0.5 * r_pq);
}

// Edge-edge case: subdivision vertices of pq and st.
double edge_edge_case(double r_ps, double r_pt, double r_qs, double r_qt, double r_pq,
                      double r_st) {
    return 1.0 + 0.25 * (r_ps + r_pt + r_qs + r_qt - r_pq - r_st);
}

} // namespace

ResistanceReport resistance_oracle(const Graph& g) {
    require_connected(g, "graph");
    return {resistance_from_pinv(laplacian_pseudoinverse(g.laplacian())), Engine::Oracle, {}};
}

ResistanceReport resistance_central(const Graph& g) {
    if (g.order() < 2) fail(ErrorCode::BadParams, "central graph engine needs order >= 2");
    require_connected(g, "graph");
    const int n = g.order(), m = g.size();

    Matrix shifted = -0.5 * g.laplacian().to_matrix() + static_cast<double>(n) * Matrix::identity(n);
    const Matrix h = spd_inverse(SymMatrix::from_matrix(shifted));

    SymMatrix r(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.set(i, j, h(i, i) + h(j, j) - 2.0 * h(i, j));
    for (int k = 0; k < m; ++k) {
        const auto [p, q] = g.edge(k);
        for (int j = 0; j < n; ++j) r.set(n + k, j, incident_case(r(p, j), r(q, j), r(p, q)));
    }
    for (int k1 = 0; k1 < m; ++k1) {
        const auto [p, q] = g.edge(k1);
        for (int k2 = k1 + 1; k2 < m; ++k2) {
            const auto [s, t] = g.edge(k2);
            r.set(n + k1, n + k2,
                  edge_edge_case(r(p, s), r(p, t), r(q, s), r(q, t), r(p, q), r(s, t)));
        }
    }
    return {std::move(r), Engine::ClosedForm, {}};
}

ResistanceReport resistance_cvj(const Graph& g1, const Graph& g2) {
    if (g1.order() < 2) fail(ErrorCode::BadParams, "central vertex join needs order(g1) >= 2");
    require_connected(g1, "first operand");
    const int n1 = g1.order(), m1 = g1.size(), n2 = g2.order();
    const double cross = 1.0 / (n1 * static_cast<double>(n1 + n2)) + testing::engine_fault_offset;

    Matrix hs = -0.5 * g1.laplacian().to_matrix() +
                static_cast<double>(n1 + n2) * Matrix::identity(n1);
    const Matrix h = spd_inverse(SymMatrix::from_matrix(hs));
    Matrix gs = g2.laplacian().to_matrix() + static_cast<double>(n1) * Matrix::identity(n2);
    const Matrix gi = spd_inverse(SymMatrix::from_matrix(gs));

    const int off = n1 + m1;
    SymMatrix r(n1 + m1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) r.set(i, j, h(i, i) + h(j, j) - 2.0 * h(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j)
            r.set(off + i, off + j, gi(i, i) + gi(j, j) - 2.0 * gi(i, j));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) r.set(i, off + j, h(i, i) + gi(j, j) - cross);
    // subdivision vertex against everything outside the subdivision class
    for (int k = 0; k < m1; ++k) {
        const auto [p, q] = g1.edge(k);
        for (int j = 0; j < n1; ++j) r.set(n1 + k, j, incident_case(r(p, j), r(q, j), r(p, q)));
        for (int j = 0; j < n2; ++j)
            r.set(n1 + k, off + j, incident_case(r(p, off + j), r(q, off + j), r(p, q)));
    }
    for (int k1 = 0; k1 < m1; ++k1) {
        const auto [p, q] = g1.edge(k1);
        for (int k2 = k1 + 1; k2 < m1; ++k2) {
            const auto [s, t] = g1.edge(k2);
            r.set(n1 + k1, n1 + k2,
                  edge_edge_case(r(p, s), r(p, t), r(q, s), r(q, t), r(p, q), r(s, t)));
        }
    }
    return {std::move(r), Engine::ClosedForm, {}};
}

ResistanceReport resistance_cej(const Graph& g1, const Graph& g2) {
    if (g1.order() < 2) fail(ErrorCode::BadParams, "central edge join needs order(g1) >= 2");
    require_connected(g1, "first operand");
    const auto d_opt = g1.regular_degree();
    if (!d_opt) fail(ErrorCode::NotRegular, "closed form for the edge join needs a regular first operand");
    const int d = *d_opt;
    const int n1 = g1.order(), m1 = g1.size(), n2 = g2.order();

    const double s2 = n2 + 2.0;
    const double a = (n1 * s2 + n2 * d) / s2;
    const double b = -(n2 + 1.0) / s2;

    Matrix ns = b * g1.laplacian().to_matrix() + a * Matrix::identity(n1);
    const Matrix nm = spd_inverse(SymMatrix::from_matrix(ns)); // (aI + bL)^{-1}, SPD since a + b*mu > 0
    Matrix gs = g2.laplacian().to_matrix() + static_cast<double>(m1) * Matrix::identity(n2);
    const Matrix gi = spd_inverse(SymMatrix::from_matrix(gs));

    const int off = n1 + m1;
    SymMatrix r(n1 + m1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) r.set(i, j, nm(i, i) + nm(j, j) - 2.0 * nm(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j)
            r.set(off + i, off + j, gi(i, i) + gi(j, j) - 2.0 * gi(i, j));
    const double cross_g1_g2 = (n1 * s2 - 2.0 * d) / (n1 * d * (n1 * s2 + n2 * d));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) r.set(i, off + j, nm(i, i) + gi(j, j) + cross_g1_g2);

    // (Q^T N Q)_{ij} expands to a four-term sum of N entries over the edge
    // endpoints; never materialize the m x m product.
    auto qnq = [&](int k1, int k2) {
        const auto [p, q] = g1.edge(k1);
        const auto [s, t] = g1.edge(k2);
        return nm(p, s) + nm(p, t) + nm(q, s) + nm(q, t);
    };

    for (int k1 = 0; k1 < m1; ++k1) {
        const auto [p, q] = g1.edge(k1);
        for (int k2 = k1 + 1; k2 < m1; ++k2) {
            const auto [s, t] = g1.edge(k2);
            const double v = 2.0 / s2 +
                             (r(p, q) + r(s, t) + 4.0 * nm(p, q) + 4.0 * nm(s, t) -
                              2.0 * qnq(k1, k2)) /
                                 (s2 * s2);
            r.set(n1 + k1, n1 + k2, v);
        }
    }
    const double ev_const = (2.0 * m1 + n2) / (2.0 * m1 * s2) - n2 * n2 / (a * n1 * s2 * s2);
    for (int k = 0; k < m1; ++k) {
        const auto [p, q] = g1.edge(k);
        const double head = (r(p, q) + 4.0 * nm(p, q)) / (s2 * s2);
        for (int j = 0; j < n1; ++j) {
            const double v = head + nm(j, j) - (2.0 / s2) * (nm(p, j) + nm(q, j)) + ev_const;
            r.set(n1 + k, j, v);
        }
    }
    const double eg2_const = (m1 - 1.0) / (m1 * s2) - 4.0 / (a * n1 * s2 * s2);
    for (int k = 0; k < m1; ++k) {
        const auto [p, q] = g1.edge(k);
        const double head = (r(p, q) + 4.0 * nm(p, q)) / (s2 * s2);
        for (int j = 0; j < n2; ++j) r.set(n1 + k, off + j, head + gi(j, j) + eg2_const);
    }
    return {std::move(r), Engine::ClosedForm, {}};
}

ResistanceReport resistance_block(const LabeledJoinGraph& joined) {
    const Graph& g1 = joined.source1;
    require_connected(g1, "first operand");
    const int n1 = joined.n1(), m1 = joined.m1(), n2 = joined.n2();
    if (joined.kind == JoinKind::Plain)
        fail(ErrorCode::BadParams, "block engine needs a constructed join");

    // Partition of the join Laplacian used throughout: the G1 block on top,
    // subdivision (+ G2) block below. L1 = cI - J + A(G1) with c the G1
    // degree constant, L2 the connection block, L3 the lower block.
    const SymMatrix a1 = g1.adjacency();
    const int lower = m1 + n2;
    const double g1_diag = (joined.kind == JoinKind::Cvj) ? n1 + n2 : n1;

    Matrix l1(n1, n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            l1(i, j) = (i == j ? g1_diag : 0.0) - 1.0 + a1(i, j);

    Matrix l2(n1, lower);
    const Matrix q1 = g1.incidence();
    for (int i = 0; i < n1; ++i)
        for (int k = 0; k < m1; ++k) l2(i, k) = -q1(i, k);
    if (joined.kind == JoinKind::Cvj) {
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) l2(i, m1 + j) = -1.0;
    }

    Matrix l3(lower, lower);
    const double edge_diag = (joined.kind == JoinKind::Cej) ? n2 + 2.0 : 2.0;
    for (int k = 0; k < m1; ++k) l3(k, k) = edge_diag;
    if (n2 > 0) {
        const SymMatrix lg2 = joined.source2->laplacian();
        const double g2_shift = (joined.kind == JoinKind::Cvj) ? n1 : m1;
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j)
                l3(m1 + i, m1 + j) = lg2(i, j) + (i == j ? g2_shift : 0.0);
        if (joined.kind == JoinKind::Cej) {
            for (int k = 0; k < m1; ++k)
                for (int j = 0; j < n2; ++j) {
                    l3(k, m1 + j) = -1.0;
                    l3(m1 + j, k) = -1.0;
                }
        }
    }

    const BlockOneInverse x =
        one_inverse_blocks(SymMatrix::from_matrix(l1), l2, SymMatrix::from_matrix(l3));
    const SymMatrix assembled = x.assemble();
    SymMatrix r(assembled.dim());
    for (std::size_t i = 0; i < assembled.dim(); ++i)
        for (std::size_t j = i + 1; j < assembled.dim(); ++j)
            r.set(i, j, assembled(i, i) + assembled(j, j) - 2.0 * assembled(i, j));
    return {std::move(r), Engine::BlockInverse, {}};
}

ResistanceReport resistance(const LabeledJoinGraph& joined, std::optional<Engine> engine,
                            bool check) {
    Engine chosen;
    if (engine) {
        chosen = *engine;
    } else if (joined.kind == JoinKind::Plain) {
        chosen = Engine::Oracle;
    } else if (joined.kind == JoinKind::Cej && !joined.source1.regular_degree()) {
        chosen = Engine::BlockInverse;
    } else {
        chosen = Engine::ClosedForm;
    }

    ResistanceReport report;
    switch (chosen) {
    case Engine::Oracle:
        report = resistance_oracle(joined.graph);
        break;
    case Engine::BlockInverse:
        report = resistance_block(joined);
        break;
    case Engine::ClosedForm:
        switch (joined.kind) {
        case JoinKind::Central:
            report = resistance_central(joined.source1);
            break;
        case JoinKind::Cvj:
            report = resistance_cvj(joined.source1, *joined.source2);
            break;
        case JoinKind::Cej:
            report = resistance_cej(joined.source1, *joined.source2);
            break;
        case JoinKind::Plain:
            fail(ErrorCode::BadParams, "no closed form for a plain graph");
        }
        break;
    }

    if (check && chosen != Engine::Oracle) {
        const ResistanceReport oracle = resistance_oracle(joined.graph);
        report.oracle_deviation = report.R.max_abs_diff(oracle.R);
    } else if (check) {
        report.oracle_deviation = 0.0;
    }
    return report;
}

double local_recursion(const Graph& g, const SymMatrix& r, int i, int j) {
    const int n = g.order();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        fail(ErrorCode::BadIndex, "recursion needs two distinct vertices");
    if (r.dim() != static_cast<std::size_t>(n))
        fail(ErrorCode::BadParams, "resistance matrix order mismatch");
    std::vector<int> nbrs;
    for (const auto& [u, v] : g.edges()) {
        if (u == i) nbrs.push_back(v);
        if (v == i) nbrs.push_back(u);
    }
    const double di = static_cast<double>(nbrs.size());
    if (nbrs.empty()) fail(ErrorCode::Disconnected, "isolated vertex");
    double neighbor_sum = 0.0;
    for (int k : nbrs) neighbor_sum += r(k, j);
    double pair_sum = 0.0; // ordered pairs: each unordered neighbor pair twice
    for (int k : nbrs)
        for (int l : nbrs) pair_sum += r(k, l);
    return (1.0 + neighbor_sum - pair_sum / (2.0 * di)) / di;
}

double max_metric_violation(const SymMatrix& r) {
    const std::size_t n = r.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::fabs(r(i, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r(i, j) <= 0.0) worst = std::max(worst, -r(i, j) + 1e-15);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                worst = std::max(worst, r(i, j) - r(i, k) - r(k, j));
            }
        }
    return worst;
}

} // namespace resjoin
