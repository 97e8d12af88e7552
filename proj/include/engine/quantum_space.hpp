#pragma once

#include <map>
#include <string>
#include <vector>

#include "engine/cochain_ops.hpp"
#include "engine/subspace.hpp"
#include "engine/word.hpp"

namespace conic {

// One homogeneous relation: a sparse linear combination of degree-n words.
struct Relation {
    int degree = 2;
    std::map<Word, Rational> terms;
};

// Coordinate row of a relation in V^⊗degree.
Matrix relation_row(const Relation& rel, std::size_t dim);

enum class Provenance { generated, direct };

// Graded two-sided ideal with per-degree components and I₀ = I₁ = {0}.
// Direct components are validated for multiplicative closure on construction.
class GradedIdeal {
  public:
    GradedIdeal(std::vector<Subspace> components, std::size_t dim, Provenance prov);
    static GradedIdeal zero(std::size_t dim, int cutoff);

    const Subspace& component(int n) const;
    int cutoff() const { return static_cast<int>(components_.size()) - 1; }
    std::size_t dim() const { return dim_; }
    Provenance provenance() const { return provenance_; }

    // Componentwise equality; provenance is bookkeeping, not identity.
    bool operator==(const GradedIdeal& o) const;
    bool operator!=(const GradedIdeal& o) const { return !(*this == o); }

  private:
    std::vector<Subspace> components_;
    std::size_t dim_;
    Provenance provenance_;
};

GradedIdeal ideal_from_relations(const std::vector<Relation>& relations, std::size_t dim,
                                 int cutoff);

// Closure of a per-degree generating family: Iₙ = A₁·I_{n−1} + I_{n−1}·A₁ + Yₙ.
// The family is indexed by degree 0…cutoff; entries below degree 2 must be zero.
GradedIdeal ideal_generated_by(const std::vector<Subspace>& graded_generators, std::size_t dim,
                               int cutoff);

struct QuantumSpace {
    std::vector<std::string> generators;
    GradedIdeal ideal;
    int cutoff;

    std::size_t dim() const { return generators.size(); }
};

QuantumSpace make_space(std::vector<std::string> generators, GradedIdeal ideal, int cutoff);
QuantumSpace free_space(std::vector<std::string> generators, int cutoff);

std::vector<std::size_t> hilbert(const QuantumSpace& qs);

// Quotient representative: eliminates the pivot coordinates of RREF(Iₙ).
std::vector<Rational> normal_form(const QuantumSpace& qs, int degree,
                                  const std::vector<Rational>& v);

// Iₙ^⊥ with the conic convention I₀^⊥ = I₁^⊥ = {0}.
Subspace ideal_perp(const QuantumSpace& qs, int n);

// Whether the ideal is generated by its degree-2 component.
bool is_quadratic(const QuantumSpace& qs);

struct CheckResult {
    bool ok = true;
    std::string detail;  // failing block / index tuple when !ok

    explicit operator bool() const { return ok; }
};

// Level 2: ψ_{r,s}(A₁^⊗r⊗I_s + I_r⊗A₁^⊗s) stays inside, for all r+s ≤ cutoff.
// Level 1: θ_n(Iₙ) ⊆ Iₙ for all n.
CheckResult is_admissible(const QuantumSpace& qs, const Cochain& c);

// Level 2: ψ stabilizes A₁^⊗s ⊗ A₁^⊗p·I_q·A₁^⊗r in both placements, all
// p+q+r+s ≤ cutoff.  Level 1: θ⁻¹(A₁^⊗p·I_q·A₁^⊗r) = A₁^⊗p·θ⁻¹(I_q)·A₁^⊗r.
CheckResult is_second_admissible(const QuantumSpace& qs, const Cochain& c);

// Twist by a counital 2-cocycle: components θₙ⁻¹(Iₙ) with θ = primitive(ψ).
QuantumSpace twist(const QuantumSpace& qs, const Cochain& psi);

// Starred generators; ideal generated by ⊕_{n≥2} Iₙ^⊥.
QuantumSpace dual(const QuantumSpace& qs);

enum class ProductKind { circ, bullet, odot, ltri, rtri, diamond };
ProductKind product_kind_from_string(const std::string& s);
std::string to_string(ProductKind k);

QuantumSpace product(ProductKind kind, const QuantumSpace& a, const QuantumSpace& b);

// Internal coHom object hom[B,A] = B▷A with generators zᵢʲ = bʲ⊗aᵢ.
QuantumSpace cohom(const QuantumSpace& b, const QuantumSpace& a);

// True iff c1 − c2 lands blockwise in the kernel of Π^⊗n.
bool equal_mod_ideal(const QuantumSpace& qs, const Cochain& c1, const Cochain& c2);

struct GaugeTransformation {
    Matrix alpha1;  // invertible generator isomorphism
    Cochain psi;    // counital 2-cocycle
};

// (β,φ)⋆(α,ψ) = (βα, ψ⋆φ^{α₁⁻¹})
GaugeTransformation gauge_compose(const GaugeTransformation& outer,
                                  const GaugeTransformation& inner);
// 𝔦(α,ψ) = (α⁻¹, 𝔦ψ^{α₁})
GaugeTransformation gauge_invert(const GaugeTransformation& g);
// Twist by ψ, then transport the components along α₁.
QuantumSpace gauge_apply(const GaugeTransformation& g, const QuantumSpace& a);

enum class WitnessVariant { pairwise, triple };

// Checks ϑ(A₁^⊗r·I_s + I_r·A₁^⊗s) = B₁^⊗r·J_s + J_r·B₁^⊗s (pairwise), or
// ϑ(A₁^⊗r·I_s·A₁^⊗t) = B₁^⊗r·J_s·B₁^⊗t (triple), for all tuples ≤ cutoff.
CheckResult verify_gauge_witness(const QuantumSpace& a, const QuantumSpace& b,
                                 const std::vector<Matrix>& theta_family,
                                 WitnessVariant variant);

// Whether aᵢ ↦ Σⱼ zᵢʲ⊗bⱼ, extended multiplicatively, maps Iₙ(A) into the
// degree-n ideal of cohom(B,A) ∘ B for 2 ≤ n ≤ max_degree.
bool coevaluation_well_defined(const QuantumSpace& b, const QuantumSpace& a, int max_degree);

}  // namespace conic
