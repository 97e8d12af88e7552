#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "engine/cochain.hpp"

namespace conic {

// The two coalgebras the convolution complex is built over: the free matrix
// bialgebra on t = V*⊗V (Δtᵢʲ = tᵢᵏ⊗t_kʲ) and the free group-like bialgebra
// (Δvᵢ = vᵢ⊗vᵢ).
enum class CoalgebraKind { matrix, group_like };

// An invertible multilinear form on words of multidegree R, stored through the
// identification Lin[(V*⊗V)^⊗k, 𝕜] ≅ End[V^⊗k]: rows are j-words (upper
// indices), columns are i-words.  Group-like forms are stored as the diagonal
// matrices diag(χ(w)).
class BiForm {
  public:
    using Generator = std::function<Matrix(const MultiIndex&)>;

    BiForm(int level, std::size_t dim, int cutoff, CoalgebraKind kind, const Generator& gen);
    static BiForm unit(int level, std::size_t dim, int cutoff,
                       CoalgebraKind kind = CoalgebraKind::matrix);

    int level() const { return level_; }
    std::size_t dim() const { return dim_; }
    int cutoff() const { return cutoff_; }
    CoalgebraKind kind() const { return kind_; }

    const Matrix& block(const MultiIndex& R) const;
    const std::map<MultiIndex, Matrix>& blocks() const { return blocks_; }
    Rational scalar_00() const;

    bool operator==(const BiForm& o) const;
    bool operator!=(const BiForm& o) const { return !(*this == o); }
    bool is_unit() const;

  private:
    int level_;
    std::size_t dim_;
    int cutoff_;
    CoalgebraKind kind_;
    std::map<MultiIndex, Matrix> blocks_;
};

void require_same_shape(const BiForm& a, const BiForm& b, const char* what);

// Blockwise transport along Lin[(V*⊗V)^⊗k, 𝕜] ≅ End[V^⊗k]; round trips are
// the identity.
Cochain form_to_cochain(const BiForm& chi);
BiForm cochain_to_form(const Cochain& psi, CoalgebraKind kind = CoalgebraKind::matrix);

// (χ∗ζ)(tᵢʲ…) = Σ_k χ(tᵢᵏ…)ζ(t_kʲ…): blockwise mat(ζ)·mat(χ).
BiForm convolution(const BiForm& chi, const BiForm& zeta);
BiForm convolution_inverse(const BiForm& chi);

// Faces d₀ = ε⊗χ, d_{n+1} = χ⊗ε, middle dᵢ = χ∘mᵢ; degeneracies insert a
// unit leg.  Same block re-indexing as the cochain complex.
BiForm face(int i, const BiForm& chi);
BiForm degeneracy(int i, const BiForm& chi);

// dχ = (d₀χ∗d₂χ∗…)⁻¹ ∗ (…∗d₃χ∗d₁χ).
BiForm bialgebra_coboundary(const BiForm& chi);

// For a level-2 convolution cocycle χ: the level-1 form λ with dλ = χ, built
// by λ₀ = 1/χ₀,₀ and λ_{n+1} = (λₙ⊗ε)∗χ_{(n,1)}.  Throws if χ is no cocycle.
BiForm form_primitive(const BiForm& chi);

// Ϝχ = (χ⊗𝕀^⊗n⊗χ⁻¹)(𝕀^⊗n⊗Δ^{(n)})Δ^{(n)}, evaluated by explicit Sweedler
// index summation.  Matrix kind lands in cochains over V*⊗V (dim d², letter
// tᵢʲ at index j·d+i); group-like forms collapse to the identity over V.
Cochain digamma(const BiForm& chi);

bool is_counital(const BiForm& chi);

BiForm random_biform(int level, std::size_t dim, int cutoff, std::uint64_t seed,
                     CoalgebraKind kind = CoalgebraKind::matrix, bool counital = false);

}  // namespace conic
