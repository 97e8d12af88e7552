#include "engine/quantum_space.hpp"

#include "engine/error.hpp"

namespace conic {

QuantumSpace make_space(std::vector<std::string> generators, GradedIdeal ideal, int cutoff) {
    if (generators.empty()) throw InputError("space: no generators");
    if (ideal.dim() != generators.size())
        throw InputError("space: ideal dimension does not match generator count");
    if (ideal.cutoff() != cutoff) throw InputError("space: ideal cutoff mismatch");
    return QuantumSpace{std::move(generators), std::move(ideal), cutoff};
}

QuantumSpace free_space(std::vector<std::string> generators, int cutoff) {
    const std::size_t dim = generators.size();
    return make_space(std::move(generators), GradedIdeal::zero(dim, cutoff), cutoff);
}

std::vector<std::size_t> hilbert(const QuantumSpace& qs) {
    std::vector<std::size_t> h;
    for (int n = 0; n <= qs.cutoff; ++n)
        h.push_back(ipow(qs.dim(), n) - qs.ideal.component(n).dim());
    return h;
}

std::vector<Rational> normal_form(const QuantumSpace& qs, int degree,
                                  const std::vector<Rational>& v) {
    if (degree < 0 || degree > qs.cutoff)
        throw InputError("normal_form: degree exceeds cutoff");
    if (v.size() != ipow(qs.dim(), degree))
        throw InputError("normal_form: vector length does not match degree");
    return qs.ideal.component(degree).reduce(v);
}

Subspace ideal_perp(const QuantumSpace& qs, int n) {
    if (n < 2) return Subspace(ipow(qs.dim(), n));
    return perp(qs.ideal.component(n));
}

bool is_quadratic(const QuantumSpace& qs) {
    std::vector<Subspace> gens;
    for (int n = 0; n <= qs.cutoff; ++n)
        gens.push_back(n == 2 ? qs.ideal.component(2) : Subspace(ipow(qs.dim(), n)));
    return ideal_generated_by(gens, qs.dim(), qs.cutoff) == qs.ideal;
}

namespace {

void require_matching(const QuantumSpace& qs, const Cochain& c) {
    if (c.dim() != qs.dim()) throw InputError("cochain dimension does not match space");
    if (c.cutoff() != qs.cutoff) throw InputError("cochain cutoff does not match space");
}

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
}

}  // namespace

CheckResult is_admissible(const QuantumSpace& qs, const Cochain& c) {
    require_matching(qs, c);
    const int D = qs.cutoff;
    if (c.level() == 1) {
        for (int n = 0; n <= D; ++n) {
            const Subspace& I = qs.ideal.component(n);
            if (I.dim() == 0) continue;
            if (!I.contains(image(c.block_deg(n), I)))
                return {false, "degree " + std::to_string(n)};
        }
        return {};
    }
    if (c.level() == 2) {
        for (int r = 0; r <= D; ++r)
            for (int s = 0; r + s <= D; ++s) {
                Subspace K = tensor(Subspace::full(ipow(qs.dim(), r)), qs.ideal.component(s)) +
                             tensor(qs.ideal.component(r), Subspace::full(ipow(qs.dim(), s)));
                if (K.dim() == 0) continue;
                if (!K.contains(image(c.block(MultiIndex{r, s}), K)))
                    return {false, "block " + tuple_str({r, s})};
            }
        return {};
    }
    throw InputError("admissibility is defined for cochain levels 1 and 2");
}

CheckResult is_second_admissible(const QuantumSpace& qs, const Cochain& c) {
    require_matching(qs, c);
    const int D = qs.cutoff;
    const std::size_t d = qs.dim();
    if (c.level() == 1) {
        for (int p = 0; p <= D; ++p)
            for (int q = 0; p + q <= D; ++q) {
                const Subspace& I = qs.ideal.component(q);
                if (I.dim() == 0) continue;
                Matrix thq_inv = c.block_deg(q).inverse();
                for (int r = 0; p + q + r <= D; ++r) {
                    const Subspace fp = Subspace::full(ipow(d, p));
                    const Subspace fr = Subspace::full(ipow(d, r));
                    Subspace lhs = image(c.block_deg(p + q + r).inverse(),
                                         tensor(fp, tensor(I, fr)));
                    Subspace rhs = tensor(fp, tensor(image(thq_inv, I), fr));
                    if (!(lhs == rhs)) return {false, tuple_str({p, q, r})};
                }
            }
        return {};
    }
    if (c.level() == 2) {
        for (int q = 0; q <= D; ++q) {
            const Subspace& I = qs.ideal.component(q);
            if (I.dim() == 0) continue;
            for (int p = 0; p + q <= D; ++p)
                for (int r = 0; p + q + r <= D; ++r) {
                    Subspace mid = tensor(Subspace::full(ipow(d, p)),
                                          tensor(I, Subspace::full(ipow(d, r))));
                    for (int s = 0; p + q + r + s <= D; ++s) {
                        const Subspace fs = Subspace::full(ipow(d, s));
                        Subspace left = tensor(fs, mid);
                        if (!left.contains(image(c.block(MultiIndex{s, p + q + r}), left)))
                            return {false, tuple_str({s, p, q, r}) + " left"};
                        Subspace right = tensor(mid, fs);
                        if (!right.contains(image(c.block(MultiIndex{p + q + r, s}), right)))
                            return {false, tuple_str({p, q, r, s}) + " right"};
                    }
                }
        }
        return {};
    }
    throw InputError("2nd admissibility is defined for cochain levels 1 and 2");
}

bool equal_mod_ideal(const QuantumSpace& qs, const Cochain& c1, const Cochain& c2) {
    require_matching(qs, c1);
    require_same_shape(c1, c2, "equal_mod_ideal");
    for (const auto& [R, m1] : c1.blocks()) {
        const Matrix& m2 = c2.block(R);
        if (m1 == m2) continue;
        // Kernel of Π^⊗n on this block: Σᵢ V^⊗… ⊗ I_{rᵢ} ⊗ V^⊗….
        Subspace K(ipow(qs.dim(), weight(R)));
        for (std::size_t i = 0; i < R.size(); ++i) {
            const Subspace& I = qs.ideal.component(R[i]);
            if (I.dim() == 0) continue;
            int pre = 0, post = 0;
            for (std::size_t j = 0; j < i; ++j) pre += R[j];
            for (std::size_t j = i + 1; j < R.size(); ++j) post += R[j];
            K = K + tensor(Subspace::full(ipow(qs.dim(), pre)),
                           tensor(I, Subspace::full(ipow(qs.dim(), post))));
        }
        for (std::size_t col = 0; col < m1.cols(); ++col) {
            std::vector<Rational> diff(m1.rows());
            for (std::size_t row = 0; row < m1.rows(); ++row)
                diff[row] = m1.at(row, col) - m2.at(row, col);
            if (!K.contains(diff)) return false;
        }
    }
    return true;
}

}  // namespace conic
