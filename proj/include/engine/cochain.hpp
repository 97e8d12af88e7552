#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "engine/matrix.hpp"
#include "engine/word.hpp"

namespace conic {

// Multi-index R = (r₁,…,rₙ) of tensor degrees, |R| = Σrᵢ.
using MultiIndex = std::vector<int>;

int weight(const MultiIndex& r);
// All R ∈ ℕ₀ⁿ with |R| ≤ cutoff, in lexicographic order (the canonical
// enumeration used for storage, serialization and parallel evaluation).
std::vector<MultiIndex> multi_indices(int n, int cutoff);

// Level-n cochain at cutoff D over V, dim V = dim: one invertible matrix of
// size dim^|R| per multi-index R with |R| ≤ D, acting on V^⊗R ≅ V^⊗|R| in
// the flat word basis. Level 0 is a single 1×1 nonzero scalar.
// Immutable after construction.
class Cochain {
public:
    Cochain(int level, std::size_t dim, int cutoff,
            const std::function<Matrix(const MultiIndex&)>& gen,
            bool parallel = true);

    static Cochain from_blocks(int level, std::size_t dim, int cutoff,
                               std::map<MultiIndex, Matrix> blocks);
    static Cochain identity(int level, std::size_t dim, int cutoff);

    int level() const { return level_; }
    std::size_t dim() const { return dim_; }
    int cutoff() const { return cutoff_; }

    const Matrix& block(const MultiIndex& r) const;
    const std::map<MultiIndex, Matrix>& blocks() const { return blocks_; }

    // Level-1 convenience: the block at (r).
    const Matrix& block_deg(int r) const;
    // Level-0/scalar convenience: the (0,0) entry of the block at (0,…,0).
    Rational scalar_00() const;

    bool operator==(const Cochain& o) const;
    bool operator!=(const Cochain& o) const { return !(*this == o); }
    bool is_identity() const;

    // Blockwise product/inverse (the group structure of C^n[V]).
    Cochain compose(const Cochain& rhs) const;
    Cochain inverse() const;

    // Throws PropertyError naming the first non-invertible block.
    void check_invertible() const;

private:
    Cochain() : level_(0), dim_(0), cutoff_(0) {}
    int level_;
    std::size_t dim_;
    int cutoff_;
    std::map<MultiIndex, Matrix> blocks_;
};

// Shape guard shared by every binary cochain operation: equal level, dim and
// cutoff (no implicit re-truncation).
void require_same_shape(const Cochain& a, const Cochain& b, const char* what);

} // namespace conic
