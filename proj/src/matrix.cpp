#include "matrix.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace resjoin {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols, double value) {
    Matrix m(rows, cols);
    for (auto& x : m.a_) x = value;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_)
        fail(ErrorCode::BadIndex, "block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(ErrorCode::BadParams, "matrix shape mismatch in addition");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(ErrorCode::BadParams, "matrix shape mismatch in subtraction");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (auto& x : a_) x *= s;
    return *this;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::fabs(x));
    return m;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::BadParams, "matrix shape mismatch in product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator*(double s, Matrix a) { return a *= s; }

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::NotSymmetric, "matrix is not square");
    const std::size_t n = m.rows();
    SymMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double x = m(i, j), y = m(j, i);
            if (!std::isfinite(x) || !std::isfinite(y))
                fail(ErrorCode::BadParams, "non-finite matrix entry");
            if (std::fabs(x - y) >= 1e-12)
                fail(ErrorCode::NotSymmetric, "asymmetry above 1e-12");
            s.set(i, j, 0.5 * (x + y));
        }
    }
    return s;
}

Matrix SymMatrix::to_matrix() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::fabs(x));
    return m;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
    if (n_ != other.n_) fail(ErrorCode::BadParams, "dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::fabs(a_[k] - other.a_[k]));
    return m;
}

} // namespace resjoin
