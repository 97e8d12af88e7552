#pragma once
#include <cstdint>

#include "engine/cochain.hpp"
#include "engine/subspace.hpp"

namespace conic {

// Coface δᵢ: Cⁿ → Cⁿ⁺¹, 0 ≤ i ≤ n+1. Middle cofaces reuse blocks verbatim at
// the merged index Dᵢ(R); the outer two tensor an identity on the left/right.
Cochain coface(int i, const Cochain& psi);

// Codegeneracy σᵢ: Cⁿ⁺¹ → Cⁿ, 0 ≤ i ≤ n: block at R is the block of ψ at
// Sᵢ(R), the index with a zero inserted at position i.
Cochain codegeneracy(int i, const Cochain& psi);

struct Coboundary {
    Cochain full;   // ∂ψ = ∂₋ψ·(∂₊ψ)⁻¹
    Cochain minus;  // ∂₋ψ = ordered product of δᵢψ, odd i ascending
    Cochain plus;   // ∂₊ψ = ordered product of δᵢψ, even i descending
};
Coboundary coboundary(const Cochain& psi);

struct CochainClass {
    bool is_counital = false;
    bool is_cocycle = false;
    bool is_bicharacter = false;      // level 2 only
    bool is_antibicharacter = false;  // level 2 only
    Rational scalar_00 = 0;
};
CochainClass classify(const Cochain& psi);
bool is_counital(const Cochain& psi);

// The building blocks of the (anti)bicharacter identities on level 3:
// ψ₁₂ = δ₃ψ, ψ₂₃ = δ₀ψ, and ψ₁₃ = (𝕀⊗f⁻¹)ψ₁₂(𝕀⊗f) with f the degree-wise
// flip of the last two slots.
Matrix psi13_block(const Cochain& psi, int r, int s, int t);

// Extends an invertible seed on V⊗V to the unique level-2 (anti)bicharacter
// with that (1,1) block; ψ_{r,0} = ψ_{0,s} = identity.
Cochain extend_seed(const Matrix& seed, bool anti, int cutoff);

// Seed-level cocycle criteria: Yang–Baxter ψ₁₂ψ₁₃ψ₂₃ = ψ₂₃ψ₁₃ψ₁₂ for
// bicharacters, commuting legs ψ₁₂ψ₂₃ = ψ₂₃ψ₁₂ for anti-bicharacters.
bool seed_yang_baxter(const Matrix& seed);
bool seed_commuting_legs(const Matrix& seed);

// The unique level-1 θ with ∂θ = ψ and θ₁ = ϖ, via θ_{n+1} = ψ_{n,1}(θ_n⊗ϖ);
// verifies ∂θ = ψ and throws PropertyError naming the failing block (which
// happens exactly when ψ was not a cocycle). Default ϖ = 𝕀 picks the
// normalized primitive.
Cochain primitive(const Cochain& psi, const Matrix& varpi);
Cochain primitive(const Cochain& psi);

// ψ^!: blockwise transpose-inverse (the induced map on the dual in the
// coordinatewise dual basis). An involution; commutes with ∂.
Cochain coadjoint(const Cochain& psi);

// 𝔧(ψ over V, φ over W): blocks t⁻¹(ψ_R⊗φ_R)t on the interleaved basis of
// (V⊗W)^⊗|R|, t the deinterleaving shuffle.
Cochain product_cochain(const Cochain& a, const Cochain& b);

// ⋆ on counital 2-cocycles: (ψ⋆φ)_{r,s} = ψ_{r,s}(θ_r⊗θ_s)φ_{r,s}(θ_r⊗θ_s)⁻¹
// with θ = primitive(ψ); 𝔦ψ = (θ⊗θ)⁻¹ψ⁻¹(θ⊗θ).
Cochain star(const Cochain& psi, const Cochain& phi);
Cochain star_inverse(const Cochain& psi);

// The level-1 θ with ∂₋θ·φ·(∂₊θ)⁻¹ = ψ and θ₁ = ϖ·φ₁-primitive offset:
// θ_k = λ_k·ϖ^⊗k·χ_k⁻¹ for λ, χ the primitives of ψ, φ. Verified blockwise.
Cochain cohomology_witness(const Cochain& psi, const Cochain& phi, const Matrix& varpi);

// ψ^f: blockwise conjugation by f^⊗|R|.
Cochain conjugate_by_iso(const Matrix& f, const Cochain& psi);

// Restriction along an inclusion V ⊂ W given by independent basis rows:
// requires ψ(V^⊗R) ⊆ V^⊗R for every R (throws PropertyError naming the
// offending R) and rewrites blocks in the induced basis of V^⊗|R|.
Cochain restrict_cochain(const Cochain& psi, const Matrix& inclusion_rows);

// Deterministic random cochain with invertible integer blocks (counital
// variant forces identity on zero-containing indices). Used by tests,
// scenario suites and the benchmark.
Cochain random_cochain(int level, std::size_t dim, int cutoff, std::uint64_t seed,
                       bool counital);

} // namespace conic
