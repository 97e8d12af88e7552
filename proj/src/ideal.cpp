#include "engine/quantum_space.hpp"

#include "engine/error.hpp"

namespace conic {

Matrix relation_row(const Relation& rel, std::size_t dim) {
    if (rel.degree < 2) throw InputError("relation: degree must be at least 2");
    if (rel.terms.empty()) throw InputError("relation: no terms");
    Matrix row(1, ipow(dim, rel.degree));
    for (const auto& [w, c] : rel.terms) {
        if (static_cast<int>(w.size()) != rel.degree)
            throw InputError("relation: word length does not match degree");
        for (int letter : w)
            if (letter < 0 || static_cast<std::size_t>(letter) >= dim)
                throw InputError("relation: letter out of range");
        if (c == 0) throw InputError("relation: zero coefficient");
        row.at(0, flat_index(w, dim)) = c;
    }
    return row;
}

GradedIdeal::GradedIdeal(std::vector<Subspace> components, std::size_t dim, Provenance prov)
    : components_(std::move(components)), dim_(dim), provenance_(prov) {
    if (dim_ == 0) throw InputError("graded ideal: dimension must be positive");
    if (components_.size() < 2) throw InputError("graded ideal: cutoff must be at least 1");
    for (std::size_t n = 0; n < components_.size(); ++n)
        if (components_[n].ambient() != ipow(dim_, n))
            throw InputError("graded ideal: component ambient mismatch at degree " +
                             std::to_string(n));
    if (components_[0].dim() != 0)
        throw PropertyError("graded ideal: I₀ ≠ 0 (degenerate space)");
    if (components_[1].dim() != 0)
        throw PropertyError("graded ideal: I₁ ≠ 0 (not conic)");
    if (provenance_ == Provenance::direct) {
        // Direct components must already be multiplicatively closed.
        const Subspace full1 = Subspace::full(dim_);
        for (std::size_t n = 1; n + 1 < components_.size(); ++n) {
            if (!components_[n + 1].contains(tensor(full1, components_[n])) ||
                !components_[n + 1].contains(tensor(components_[n], full1)))
                throw PropertyError("graded ideal: components not closed at degree " +
                                    std::to_string(n + 1));
        }
    }
}

GradedIdeal GradedIdeal::zero(std::size_t dim, int cutoff) {
    std::vector<Subspace> comp;
    for (int n = 0; n <= cutoff; ++n) comp.emplace_back(ipow(dim, n));
    return GradedIdeal(std::move(comp), dim, Provenance::generated);
}

const Subspace& GradedIdeal::component(int n) const {
    if (n < 0 || n > cutoff())
        throw InputError("graded ideal: degree " + std::to_string(n) + " exceeds cutoff");
    return components_[static_cast<std::size_t>(n)];
}

bool GradedIdeal::operator==(const GradedIdeal& o) const {
    return dim_ == o.dim_ && components_ == o.components_;
}

GradedIdeal ideal_generated_by(const std::vector<Subspace>& graded_generators, std::size_t dim,
                               int cutoff) {
    if (cutoff < 1) throw InputError("ideal: cutoff must be at least 1");
    if (graded_generators.size() != static_cast<std::size_t>(cutoff) + 1)
        throw InputError("ideal: generating family must cover degrees 0…cutoff");
    for (std::size_t n = 0; n < 2 && n < graded_generators.size(); ++n)
        if (graded_generators[n].dim() != 0)
            throw InputError("ideal: generators below degree 2");

    const Subspace full1 = Subspace::full(dim);
    std::vector<Subspace> comp;
    comp.emplace_back(1);
    comp.emplace_back(dim);
    for (int n = 2; n <= cutoff; ++n) {
        Subspace prev = comp.back();
        comp.push_back(tensor(full1, prev) + tensor(prev, full1) +
                       graded_generators[static_cast<std::size_t>(n)]);
    }
    return GradedIdeal(std::move(comp), dim, Provenance::generated);
}

GradedIdeal ideal_from_relations(const std::vector<Relation>& relations, std::size_t dim,
                                 int cutoff) {
    std::vector<std::vector<Matrix>> rows_by_degree(static_cast<std::size_t>(cutoff) + 1);
    for (const auto& rel : relations) {
        if (rel.degree > cutoff)
            throw InputError("relation: degree " + std::to_string(rel.degree) +
                             " exceeds cutoff " + std::to_string(cutoff));
        rows_by_degree[static_cast<std::size_t>(rel.degree)].push_back(relation_row(rel, dim));
    }
    std::vector<Subspace> gens;
    for (int n = 0; n <= cutoff; ++n) {
        const auto& rows = rows_by_degree[static_cast<std::size_t>(n)];
        if (rows.empty()) {
            gens.emplace_back(ipow(dim, n));
            continue;
        }
        Matrix stacked(rows.size(), ipow(dim, n));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < stacked.cols(); ++j) stacked.at(i, j) = rows[i].at(0, j);
        gens.push_back(Subspace::span(stacked));
    }
    return ideal_generated_by(gens, dim, cutoff);
}

}  // namespace conic
