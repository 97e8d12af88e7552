#include "engine/error.hpp"
#include "engine/quantum_space.hpp"

namespace conic {

namespace {

// Pull a subspace given in deinterleaved coordinates A^⊗n⊗B^⊗n back to the
// interleaved letter order of (A₁⊗B₁)^⊗n.
Subspace pull_interleaved(const Subspace& s, int n, std::size_t dim_a, std::size_t dim_b) {
    return image(shuffle_perm(n, dim_a, dim_b).transpose(), s);
}

std::vector<std::string> pair_names(const QuantumSpace& a, const QuantumSpace& b) {
    std::vector<std::string> names;
    for (const auto& x : a.generators)
        for (const auto& y : b.generators) names.push_back("(" + x + "," + y + ")");
    return names;
}

}  // namespace

QuantumSpace dual(const QuantumSpace& qs) {
    std::vector<std::string> names;
    for (const auto& g : qs.generators) names.push_back(g + "*");
    std::vector<Subspace> gens;
    for (int n = 0; n <= qs.cutoff; ++n) gens.push_back(ideal_perp(qs, n));
    return make_space(std::move(names), ideal_generated_by(gens, qs.dim(), qs.cutoff),
                      qs.cutoff);
}

ProductKind product_kind_from_string(const std::string& s) {
    if (s == "circ") return ProductKind::circ;
    if (s == "bullet") return ProductKind::bullet;
    if (s == "odot") return ProductKind::odot;
    if (s == "ltri") return ProductKind::ltri;
    if (s == "rtri") return ProductKind::rtri;
    if (s == "diamond") return ProductKind::diamond;
    throw InputError("unknown product kind: " + s);
}

std::string to_string(ProductKind k) {
    switch (k) {
        case ProductKind::circ: return "circ";
        case ProductKind::bullet: return "bullet";
        case ProductKind::odot: return "odot";
        case ProductKind::ltri: return "ltri";
        case ProductKind::rtri: return "rtri";
        case ProductKind::diamond: return "diamond";
    }
    throw InputError("unknown product kind");
}

QuantumSpace product(ProductKind kind, const QuantumSpace& a, const QuantumSpace& b) {
    if (a.cutoff != b.cutoff) throw InputError("product: cutoffs differ");
    const int D = a.cutoff;
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> names = pair_names(a, b);

    const bool direct = (kind == ProductKind::circ || kind == ProductKind::odot);
    if (kind == ProductKind::bullet && !(is_quadratic(a) && is_quadratic(b)))
        throw InputError("product: bullet requires quadratic inputs");

    std::vector<Subspace> comp;
    for (int n = 0; n <= D; ++n) {
        const Subspace fa = Subspace::full(ipow(da, n));
        const Subspace fb = Subspace::full(ipow(db, n));
        Subspace s(ipow(da * db, n));
        switch (kind) {
            case ProductKind::circ:
                s = tensor(a.ideal.component(n), fb) + tensor(fa, b.ideal.component(n));
                break;
            case ProductKind::odot:
                s = tensor(a.ideal.component(n), b.ideal.component(n));
                break;
            case ProductKind::rtri:
                s = tensor(ideal_perp(a, n), b.ideal.component(n));
                break;
            case ProductKind::ltri:
                s = tensor(a.ideal.component(n), ideal_perp(b, n));
                break;
            case ProductKind::diamond:
                s = tensor(ideal_perp(a, n), ideal_perp(b, n));
                break;
            case ProductKind::bullet:
                if (n == 2) s = tensor(a.ideal.component(2), b.ideal.component(2));
                break;
        }
        comp.push_back(pull_interleaved(s, n, da, db));
    }

    GradedIdeal ideal = direct ? GradedIdeal(std::move(comp), da * db, Provenance::direct)
                               : ideal_generated_by(comp, da * db, D);
    return make_space(std::move(names), std::move(ideal), D);
}

QuantumSpace cohom(const QuantumSpace& b, const QuantumSpace& a) {
    QuantumSpace h = product(ProductKind::rtri, b, a);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i)
            names.push_back("z_" + std::to_string(i) + "^" + std::to_string(j));
    h.generators = std::move(names);
    return h;
}

}  // namespace conic
