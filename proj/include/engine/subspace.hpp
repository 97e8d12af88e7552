#pragma once
#include <cstddef>
#include <vector>

#include "engine/matrix.hpp"

namespace conic {

// Reduced row echelon form with zero rows removed; also returns the pivot
// columns (strictly increasing). The canonical form every subspace is kept in.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Subspace of ℚ^ambient, basis rows in RREF. Equality of subspaces is
// entrywise equality of the canonical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    // Canonicalizes the row span of `rows` (rows may be dependent or zero).
    static Subspace span(const Matrix& rows);
    static Subspace span_rows(std::size_t ambient, const std::vector<std::vector<Rational>>& rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    // Eliminates the pivot coordinates of v against the basis. Linear,
    // idempotent; v lies in the subspace iff the result is zero.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    Subspace operator+(const Subspace& o) const;       // span of stacked bases
    Subspace intersect(const Subspace& o) const;       // via perp(perp+perp)

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Null space {x : M·x = 0} as row vectors. With dual bases identified
// coordinatewise, kernel of a basis matrix of S is S^⊥.
Subspace kernel(const Matrix& m);
Subspace perp(const Subspace& s);

// {M·v : v ∈ S} — computed as the row span of basis·Mᵀ.
Subspace image(const Matrix& m, const Subspace& s);
// image(M⁻¹, S); M must be invertible.
Subspace preimage(const Matrix& m, const Subspace& s);

// Tensor product of subspaces: span of pairwise kron of basis rows,
// inside ℚ^(ambient_s · ambient_t).
Subspace tensor(const Subspace& s, const Subspace& t);

// Particular solution X of A·X = B (exact elimination); throws
// PropertyError when the system is inconsistent. Free variables are set
// to zero, so the solution is unique when A has full column rank.
Matrix solve(const Matrix& a, const Matrix& b);

} // namespace conic
