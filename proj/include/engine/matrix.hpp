#pragma once
#include <cstddef>
#include <vector>

#include "engine/rational.hpp"

namespace conic {

// Dense row-major matrix over ℚ. Convention used throughout: matrices act on
// column vectors; subspace bases (see subspace.hpp) are row vectors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix scalar_matrix(std::size_t n, const Rational& v);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // dispatches to mul_parallel
    Matrix operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    Matrix transpose() const;
    // Gauss–Jordan; throws PropertyError on a singular matrix.
    Matrix inverse() const;

    bool is_identity() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Kronecker product in the row-major block layout that matches the
// word-concatenation basis of word.hpp: (A⊗B)[(i1,i2),(j1,j2)] = A[i1,j1]·B[i2,j2]
// with flat index i1·rowsB + i2.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_pow(const Matrix& a, std::size_t k);  // k = 0 gives the 1×1 [1]

// Permutation matrix P with P·e_j = e_{p[j]}.
Matrix perm_matrix(const std::vector<std::size_t>& p);

// The two multiplication kernels; identical results bit for bit. operator*
// uses the parallel one (which falls back to serial below a size threshold
// or when built without OpenMP).
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);

} // namespace conic
