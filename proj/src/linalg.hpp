#pragma once

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace resjoin {

/// Cholesky LL^T of a symmetric positive definite matrix. A pivot at or below
/// 1e-12 * max|diag| raises NotPositiveDefinite.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const SymMatrix& a);

    std::size_t dim() const { return n_; }
    std::vector<double> solve(const std::vector<double>& b) const;
    Matrix solve(const Matrix& b) const;
    Matrix inverse() const;

private:
    std::size_t n_ = 0;
    std::vector<double> l_; // lower triangle, row major full storage
};

/// LU with partial pivoting for general square systems (the shifted matrices
/// aI + bL may be indefinite). A pivot at or below 1e-12 * max|entry| is
/// treated as singular; the caller chooses the error code.
class LuFactor {
public:
    LuFactor(const Matrix& a, ErrorCode singular_code);

    std::size_t dim() const { return n_; }
    Matrix solve(const Matrix& b) const;
    Matrix inverse() const;

private:
    std::size_t n_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> perm_;
};

/// Solves A X = B for symmetric positive definite A.
Matrix solve_spd(const SymMatrix& a, const Matrix& b);

/// Moore-Penrose inverse of the Laplacian of a connected graph via the
/// rank-one shift (L + J/n)^{-1} - J/n. Disconnected input makes the shifted
/// matrix singular and raises Disconnected.
SymMatrix laplacian_pseudoinverse(const SymMatrix& laplacian);

/// {1}-inverse of a connected Laplacian partitioned as [[L1, L2], [L2^T, L3]]
/// with L3 nonsingular:
///
///   X = [[ M+ , -M+ L2 L3^-1                        ],
///        [ .. , L3^-1 + L3^-1 L2^T M+ L2 L3^-1      ]],   M = L1 - L2 L3^-1 L2^T,
///
/// where M+ is the Moore-Penrose inverse of the Schur complement M. The
/// assembled X is symmetric and satisfies L X L = L.
struct BlockOneInverse {
    Matrix top_left;     // M+ (n1 x n1)
    Matrix top_right;    // -M+ L2 L3^-1 (n1 x n3)
    Matrix bottom_right; // L3^-1 + L3^-1 L2^T M+ L2 L3^-1 (n3 x n3)
    std::size_t n1 = 0;

    SymMatrix assemble() const;
};

BlockOneInverse one_inverse_blocks(const SymMatrix& l1, const Matrix& l2, const SymMatrix& l3);

/// N = (aL + bI)^{-1} - J/(bn), the Moore-Penrose inverse of aL + bI - (b/n)J.
/// Requires nonzero a, b and an invertible shift (SingularShift otherwise).
SymMatrix shifted_laplacian_pseudoinverse(double a, double b, const SymMatrix& laplacian);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const SymMatrix& a);

/// Worst violation over the four Penrose equations for X against A.
double penrose_deviation(const Matrix& a, const Matrix& x);

} // namespace resjoin
