#include "engine/error.hpp"
#include "engine/quantum_space.hpp"

namespace conic {

namespace {

void require_gauge(const GaugeTransformation& g) {
    if (!g.alpha1.is_square() || g.alpha1.rows() != g.psi.dim())
        throw InputError("gauge: generator map shape does not match cochain dimension");
    if (g.psi.level() != 2) throw InputError("gauge: cochain must have level 2");
}

}  // namespace

GaugeTransformation gauge_compose(const GaugeTransformation& outer,
                                  const GaugeTransformation& inner) {
    require_gauge(outer);
    require_gauge(inner);
    require_same_shape(outer.psi, inner.psi, "gauge composition");
    return {outer.alpha1 * inner.alpha1,
            star(inner.psi, conjugate_by_iso(inner.alpha1.inverse(), outer.psi))};
}

GaugeTransformation gauge_invert(const GaugeTransformation& g) {
    require_gauge(g);
    return {g.alpha1.inverse(), conjugate_by_iso(g.alpha1, star_inverse(g.psi))};
}

QuantumSpace gauge_apply(const GaugeTransformation& g, const QuantumSpace& a) {
    require_gauge(g);
    QuantumSpace t = twist(a, g.psi);  // validates counital cocycle + admissibility
    std::vector<Subspace> comp;
    for (int n = 0; n <= t.cutoff; ++n)
        comp.push_back(image(kron_pow(g.alpha1, static_cast<std::size_t>(n)),
                             t.ideal.component(n)));
    return make_space(a.generators, GradedIdeal(std::move(comp), a.dim(), Provenance::direct),
                      a.cutoff);
}

CheckResult verify_gauge_witness(const QuantumSpace& a, const QuantumSpace& b,
                                 const std::vector<Matrix>& theta_family,
                                 WitnessVariant variant) {
    if (a.dim() != b.dim()) throw InputError("gauge witness: spaces have different dimensions");
    if (a.cutoff != b.cutoff) throw InputError("gauge witness: cutoffs differ");
    const int D = a.cutoff;
    const std::size_t d = a.dim();
    if (theta_family.size() != static_cast<std::size_t>(D) + 1)
        throw InputError("gauge witness: need one block per degree 0…cutoff");
    for (int n = 0; n <= D; ++n) {
        const Matrix& m = theta_family[static_cast<std::size_t>(n)];
        if (m.rows() != ipow(d, n) || m.cols() != ipow(d, n))
            throw InputError("gauge witness: block size mismatch at degree " + std::to_string(n));
        m.inverse();  // invertibility required; PropertyError on failure
    }

    if (variant == WitnessVariant::pairwise) {
        for (int r = 0; r <= D; ++r)
            for (int s = 0; r + s <= D; ++s) {
                const Subspace fr = Subspace::full(ipow(d, r));
                const Subspace fs = Subspace::full(ipow(d, s));
                Subspace lhs = image(theta_family[static_cast<std::size_t>(r + s)],
                                     tensor(fr, a.ideal.component(s)) +
                                         tensor(a.ideal.component(r), fs));
                Subspace rhs = tensor(fr, b.ideal.component(s)) +
                               tensor(b.ideal.component(r), fs);
                if (!(lhs == rhs))
                    return {false, "(" + std::to_string(r) + "," + std::to_string(s) + ")"};
            }
        return {};
    }
    for (int r = 0; r <= D; ++r)
        for (int s = 0; r + s <= D; ++s)
            for (int t = 0; r + s + t <= D; ++t) {
                const Subspace fr = Subspace::full(ipow(d, r));
                const Subspace ft = Subspace::full(ipow(d, t));
                Subspace lhs = image(theta_family[static_cast<std::size_t>(r + s + t)],
                                     tensor(fr, tensor(a.ideal.component(s), ft)));
                Subspace rhs = tensor(fr, tensor(b.ideal.component(s), ft));
                if (!(lhs == rhs))
                    return {false, "(" + std::to_string(r) + "," + std::to_string(s) + "," +
                                       std::to_string(t) + ")"};
            }
    return {};
}

bool coevaluation_well_defined(const QuantumSpace& b, const QuantumSpace& a, int max_degree) {
    QuantumSpace h = cohom(b, a);
    QuantumSpace c = product(ProductKind::circ, h, b);
    const std::size_t da = a.dim(), db = b.dim();
    // aᵢ ↦ Σⱼ zᵢʲ⊗bⱼ as a map V_A → V_H⊗V_B on interleaved letters.
    Matrix coev(da * db * db, da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) coev.at((j * da + i) * db + j, i) = 1;
    for (int n = 2; n <= max_degree && n <= a.cutoff; ++n) {
        const Subspace& I = a.ideal.component(n);
        if (I.dim() == 0) continue;
        if (!c.ideal.component(n).contains(
                image(kron_pow(coev, static_cast<std::size_t>(n)), I)))
            return false;
    }
    return true;
}

}  // namespace conic
