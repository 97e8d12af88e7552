#include "engine/error.hpp"
#include "engine/quantum_space.hpp"

namespace conic {

QuantumSpace twist(const QuantumSpace& qs, const Cochain& psi) {
    if (psi.level() != 2) throw InputError("twist: cochain must have level 2");
    if (psi.dim() != qs.dim()) throw InputError("twist: cochain dimension does not match space");
    if (psi.cutoff() != qs.cutoff) throw InputError("twist: cochain cutoff does not match space");

    CochainClass cls = classify(psi);
    if (!cls.is_counital) throw PropertyError("twist: cochain is not counital");
    if (!cls.is_cocycle) throw PropertyError("twist: cochain is not a cocycle");
    CheckResult adm = is_admissible(qs, psi);
    if (!adm) throw PropertyError("twist: cochain is not admissible at " + adm.detail);

    Cochain theta = primitive(psi);
    std::vector<Subspace> comp;
    for (int n = 0; n <= qs.cutoff; ++n)
        comp.push_back(image(theta.block_deg(n).inverse(), qs.ideal.component(n)));
    return make_space(qs.generators, GradedIdeal(std::move(comp), qs.dim(), Provenance::direct),
                      qs.cutoff);
}

}  // namespace conic
