#pragma once
#include <cstddef>
#include <vector>

#include "engine/matrix.hpp"

namespace conic {

// Basis of V^⊗k, dim V = dim: words (i₁,…,i_k) with letters in {0,…,dim−1},
// ordered lexicographically. Flat index = Σ i_j·dim^(k−j) (big-endian), so
// lex order equals index order and concatenation of words multiplies out to
// flat(w1)·dim^|w2| + flat(w2) — the identification kron relies on.
using Word = std::vector<int>;

std::size_t flat_index(const Word& w, std::size_t dim);
Word word_from_index(std::size_t idx, std::size_t k, std::size_t dim);

std::size_t ipow(std::size_t base, std::size_t exp);

// Deinterleaving permutation for (A₁⊗B₁)^⊗k ≅ A₁^⊗k ⊗ B₁^⊗k. Interleaved
// letters are a·dimB + b; the map sends the word ((a₁,b₁),…,(a_k,b_k)) to
// (a₁,…,a_k,b₁,…,b_k). Returned as the index map interleaved → deinterleaved.
std::vector<std::size_t> shuffle_perm_map(std::size_t k, std::size_t dimA, std::size_t dimB);
// Same as a permutation matrix S with S·e_interleaved(w) = e_deinterleaved(w).
Matrix shuffle_perm(std::size_t k, std::size_t dimA, std::size_t dimB);

// Flip V^⊗s ⊗ V^⊗t → V^⊗t ⊗ V^⊗s, e_(u,v) ↦ e_(v,u). Its inverse is
// flip_perm(dim, t, s) = transpose.
Matrix flip_perm(std::size_t dim, std::size_t s, std::size_t t);

} // namespace conic
