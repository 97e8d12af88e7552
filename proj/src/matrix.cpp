#include "engine/matrix.hpp"

#include "engine/error.hpp"
#include "engine/parallel.hpp"

namespace conic {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::scalar_matrix(std::size_t n, const Rational& v) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = v;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw InputError("ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InputError("matrix·vector shape mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in *");
    Matrix r(a.rows(), b.cols());
    serial_for(a.rows(), [&](std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    });
    return r;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in *");
    // Small products aren't worth the fork; the per-row body is identical to
    // mul_serial's, so both kernels agree bit for bit.
    if (a.rows() * b.cols() < 64 * 64) return mul_serial(a, b);
    Matrix r(a.rows(), b.cols());
    parallel_for(a.rows(), [&](std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    });
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return mul_parallel(*this, o); }

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw PropertyError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix w(*this), inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col) == 0) ++piv;
        if (piv == n) throw PropertyError("singular matrix has no inverse");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Rational d = w.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            const Rational f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    parallel_for(a.rows(), [&](std::size_t i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Rational& f = a.at(i1, j1);
            if (f == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * b.at(i2, j2);
        }
    });
    return r;
}

Matrix kron_pow(const Matrix& a, std::size_t k) {
    Matrix r = Matrix::identity(1);
    for (std::size_t i = 0; i < k; ++i) r = kron(r, a);
    return r;
}

Matrix perm_matrix(const std::vector<std::size_t>& p) {
    Matrix m(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) m.at(p[j], j) = 1;
    return m;
}

} // namespace conic
