#pragma once

#include <cstddef>
#include <vector>

namespace resjoin {

/// Dense real matrix, row major. Sized for desk-scale problems (order up to a
/// few hundred); no sparse storage anywhere in the library.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols, double value = 1.0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    Matrix transposed() const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    double max_abs() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix a);

/// Symmetric matrix with the full square stored mirrored. Construction from a
/// general Matrix enforces symmetry: any entry pair differing by 1e-12 or more
/// is an error, smaller drift is averaged away. Entries must be finite.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    /// Checked conversion; see class comment for the symmetry contract.
    static SymMatrix from_matrix(const Matrix& m);

    std::size_t dim() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    const std::vector<double>& data() const { return a_; }

    Matrix to_matrix() const;
    double trace() const;
    double max_abs() const;
    /// Largest entrywise |difference| against another matrix of equal order.
    double max_abs_diff(const SymMatrix& other) const;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

} // namespace resjoin
