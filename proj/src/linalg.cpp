#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace resjoin {

namespace {

double max_abs_diag(const SymMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::fabs(a(i, i)));
    return m;
}

} // namespace

CholeskyFactor::CholeskyFactor(const SymMatrix& a) : n_(a.dim()), l_(n_ * n_, 0.0) {
    const double pivot_tol = 1e-12 * max_abs_diag(a);
    for (std::size_t j = 0; j < n_; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
        if (!(d > pivot_tol))
            fail(ErrorCode::NotPositiveDefinite, "non-positive pivot during Cholesky");
        const double lj = std::sqrt(d);
        l_[j * n_ + j] = lj;
        for (std::size_t i = j + 1; i < n_; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l_[i * n_ + k] * l_[j * n_ + k];
            l_[i * n_ + j] = s / lj;
        }
    }
}

std::vector<double> CholeskyFactor::solve(const std::vector<double>& b) const {
    std::vector<double> y(b);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= l_[i * n_ + k] * y[k];
        y[i] /= l_[i * n_ + i];
    }
    for (std::size_t i = n_; i-- > 0;) {
        for (std::size_t k = i + 1; k < n_; ++k) y[i] -= l_[k * n_ + i] * y[k];
        y[i] /= l_[i * n_ + i];
    }
    return y;
}

Matrix CholeskyFactor::solve(const Matrix& b) const {
    if (b.rows() != n_) fail(ErrorCode::BadParams, "right-hand side shape mismatch");
    Matrix x(n_, b.cols());
    std::vector<double> col(n_);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < n_; ++i) col[i] = b(i, j);
        col = solve(col);
        for (std::size_t i = 0; i < n_; ++i) x(i, j) = col[i];
    }
    return x;
}

Matrix CholeskyFactor::inverse() const { return solve(Matrix::identity(n_)); }

LuFactor::LuFactor(const Matrix& a, ErrorCode singular_code)
    : n_(a.rows()), lu_(a.data()), perm_(n_) {
    if (a.rows() != a.cols()) fail(ErrorCode::BadParams, "LU of a non-square matrix");
    const double pivot_tol = 1e-12 * a.max_abs();
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        double best = std::fabs(lu_[k * n_ + k]);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::fabs(lu_[i * n_ + k]);
            if (v > best) { best = v; p = i; }
        }
        if (!(best > pivot_tol)) fail(singular_code, "singular matrix in LU factorization");
        if (p != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu_[k * n_ + j], lu_[p * n_ + j]);
            std::swap(perm_[k], perm_[p]);
        }
        const double piv = lu_[k * n_ + k];
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double f = lu_[i * n_ + k] / piv;
            lu_[i * n_ + k] = f;
            for (std::size_t j = k + 1; j < n_; ++j) lu_[i * n_ + j] -= f * lu_[k * n_ + j];
        }
    }
}

Matrix LuFactor::solve(const Matrix& b) const {
    if (b.rows() != n_) fail(ErrorCode::BadParams, "right-hand side shape mismatch");
    Matrix x(n_, b.cols());
    std::vector<double> y(n_);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < n_; ++i) y[i] = b(perm_[i], j);
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t k = 0; k < i; ++k) y[i] -= lu_[i * n_ + k] * y[k];
        for (std::size_t i = n_; i-- > 0;) {
            for (std::size_t k = i + 1; k < n_; ++k) y[i] -= lu_[i * n_ + k] * y[k];
            y[i] /= lu_[i * n_ + i];
        }
        for (std::size_t i = 0; i < n_; ++i) x(i, j) = y[i];
    }
    return x;
}

Matrix LuFactor::inverse() const { return solve(Matrix::identity(n_)); }

Matrix solve_spd(const SymMatrix& a, const Matrix& b) { return CholeskyFactor(a).solve(b); }

SymMatrix laplacian_pseudoinverse(const SymMatrix& laplacian) {
    const std::size_t n = laplacian.dim();
    if (n == 0) fail(ErrorCode::BadParams, "empty Laplacian");
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += laplacian(i, j);
        if (std::fabs(row) > 1e-9) fail(ErrorCode::NotLaplacian, "row sums are not zero");
    }
    const double jn = 1.0 / static_cast<double>(n);
    Matrix shifted = laplacian.to_matrix() + Matrix::ones(n, n, jn);
    Matrix inv;
    try {
        inv = CholeskyFactor(SymMatrix::from_matrix(shifted)).inverse();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPositiveDefinite)
            fail(ErrorCode::Disconnected, "Laplacian has nullity above one (graph disconnected)");
        throw;
    }
    inv -= Matrix::ones(n, n, jn);
    return SymMatrix::from_matrix(inv);
}

SymMatrix BlockOneInverse::assemble() const {
    const std::size_t n3 = bottom_right.rows();
    const std::size_t n = n1 + n3;
    Matrix x(n, n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) x(i, j) = top_left(i, j);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n3; ++j) {
            x(i, n1 + j) = top_right(i, j);
            x(n1 + j, i) = top_right(i, j);
        }
    for (std::size_t i = 0; i < n3; ++i)
        for (std::size_t j = 0; j < n3; ++j) x(n1 + i, n1 + j) = bottom_right(i, j);
    return SymMatrix::from_matrix(x);
}

BlockOneInverse one_inverse_blocks(const SymMatrix& l1, const Matrix& l2, const SymMatrix& l3) {
    const std::size_t n1 = l1.dim(), n3 = l3.dim();
    if (l2.rows() != n1 || l2.cols() != n3)
        fail(ErrorCode::BadParams, "off-diagonal block shape mismatch");
    // The assembled matrix must be a Laplacian: zero row sums.
    const double scale = std::max({l1.max_abs(), l2.max_abs(), l3.max_abs(), 1.0});
    for (std::size_t i = 0; i < n1; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n1; ++j) row += l1(i, j);
        for (std::size_t j = 0; j < n3; ++j) row += l2(i, j);
        if (std::fabs(row) > 1e-9 * scale) fail(ErrorCode::NotLaplacian, "row sums are not zero");
    }
    for (std::size_t i = 0; i < n3; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n1; ++j) row += l2(j, i);
        for (std::size_t j = 0; j < n3; ++j) row += l3(i, j);
        if (std::fabs(row) > 1e-9 * scale) fail(ErrorCode::NotLaplacian, "row sums are not zero");
    }

    const Matrix l3_inv = LuFactor(l3.to_matrix(), ErrorCode::SingularL3).inverse();

    const Matrix l2_l3inv = l2 * l3_inv;                       // n1 x n3
    const Matrix schur = l1.to_matrix() - l2_l3inv * l2.transposed();
    // Schur complement of a connected Laplacian: singular with kernel e, so
    // the same rank-one shift used for L+ applies.
    const double jn = 1.0 / static_cast<double>(n1);
    Matrix m_pinv;
    try {
        m_pinv = CholeskyFactor(SymMatrix::from_matrix(schur + Matrix::ones(n1, n1, jn))).inverse();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPositiveDefinite)
            fail(ErrorCode::Disconnected, "Schur complement has nullity above one");
        throw;
    }
    m_pinv -= Matrix::ones(n1, n1, jn);

    BlockOneInverse out;
    out.n1 = n1;
    out.top_left = m_pinv;
    out.top_right = -1.0 * (m_pinv * l2_l3inv);
    out.bottom_right = l3_inv + l2_l3inv.transposed() * m_pinv * l2_l3inv;
    return out;
}

SymMatrix shifted_laplacian_pseudoinverse(double a, double b, const SymMatrix& laplacian) {
    if (a == 0.0 || b == 0.0) fail(ErrorCode::BadParams, "shift coefficients must be nonzero");
    const std::size_t n = laplacian.dim();
    Matrix shifted = laplacian.to_matrix();
    shifted *= a;
    shifted += b * Matrix::identity(n);
    Matrix inv = LuFactor(shifted, ErrorCode::SingularShift).inverse();
    inv -= Matrix::ones(n, n, 1.0 / (b * static_cast<double>(n)));
    return SymMatrix::from_matrix(inv);
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& a) {
    const std::size_t n = a.dim();
    Matrix m = a.to_matrix();
    const double target = 1e-14 * std::max(1.0, m.max_abs());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::fabs(m(i, j)));
        if (off < target) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (std::fabs(apq) < target) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double penrose_deviation(const Matrix& a, const Matrix& x) {
    const Matrix ax = a * x;
    const Matrix xa = x * a;
    double dev = (ax * a - a).max_abs();
    dev = std::max(dev, (xa * x - x).max_abs());
    dev = std::max(dev, (ax - ax.transposed()).max_abs());
    dev = std::max(dev, (xa - xa.transposed()).max_abs());
    return dev;
}

} // namespace resjoin
