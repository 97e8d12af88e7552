#include "engine/subspace.hpp"

#include "engine/error.hpp"

namespace conic {

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix w(m);
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && w.at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(sel, j), w.at(r, j));
        const Rational d = w.at(r, c);
        for (std::size_t j = c; j < cols; ++j) w.at(r, j) /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const Rational f = w.at(i, c);
            for (std::size_t j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = w.at(i, j);
    if (pivots) *pivots = piv;
    return out;
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows, &s.pivots_);
    return s;
}

Subspace Subspace::span_rows(std::size_t ambient,
                             const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Subspace(ambient);
    for (const auto& r : rows)
        if (r.size() != ambient) throw InputError("row length does not match ambient dimension");
    return span(Matrix::from_rows(rows));
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
    if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const Rational f = v[pivots_[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_.at(r, j);
    }
    return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    auto red = reduce(v);
    for (const auto& x : red)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw InputError("ambient dimension mismatch");
    for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
        std::vector<Rational> v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = other.basis_.at(r, j);
        if (!contains(v)) return false;
    }
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw InputError("ambient dimension mismatch in subspace sum");
    Matrix stacked(dim() + o.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < o.dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = o.basis_.at(i, j);
    return span(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // (S ∩ T)^⊥ = S^⊥ + T^⊥ in the coordinatewise dual identification.
    return perp(perp(*this) + perp(o));
}

Subspace kernel(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span_rows(m.cols(), rows);
}

Subspace perp(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.ambient());
    return kernel(s.basis());
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw InputError("matrix/subspace shape mismatch in image");
    return Subspace::span(s.basis() * m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    return image(m.inverse(), s);
}

Subspace tensor(const Subspace& s, const Subspace& t) {
    if (s.dim() == 0 || t.dim() == 0) return Subspace(s.ambient() * t.ambient());
    return Subspace::span(kron(s.basis(), t.basis()));
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
    const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
    Matrix w(n, m + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j) w.at(i, m + j) = b.at(i, j);
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(w, &piv);
    Matrix x(m, k);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= m) throw PropertyError("solve: inconsistent linear system");
        for (std::size_t j = 0; j < k; ++j) x.at(piv[i], j) = r.at(i, m + j);
    }
    return x;
}

} // namespace conic
