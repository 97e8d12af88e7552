#include "engine/biform.hpp"

#include <exception>
#include <random>

#include "engine/error.hpp"
#include "engine/parallel.hpp"
#include "engine/word.hpp"

namespace conic {

namespace {

bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

MultiIndex merge_at(const MultiIndex& R, int i) {
    // D_i: add entries i−1 and i (0-based) of the level-(n+1) index.
    MultiIndex out;
    for (std::size_t k = 0; k < R.size(); ++k) {
        if (static_cast<int>(k) == i)
            out.back() += R[k];
        else
            out.push_back(R[k]);
    }
    return out;
}

MultiIndex insert_zero_at(const MultiIndex& R, int i) {
    MultiIndex out = R;
    out.insert(out.begin() + i, 0);
    return out;
}

}  // namespace

BiForm::BiForm(int level, std::size_t dim, int cutoff, CoalgebraKind kind, const Generator& gen)
    : level_(level), dim_(dim), cutoff_(cutoff), kind_(kind) {
    if (level < 0) throw InputError("form: negative level");
    if (dim == 0) throw InputError("form: dimension must be positive");
    if (cutoff < 0) throw InputError("form: negative cutoff");
    auto indices = multi_indices(level, cutoff);
    std::vector<Matrix> slot(indices.size(), Matrix(0, 0));
    std::vector<std::exception_ptr> err(indices.size());
    parallel_for(indices.size(), [&](std::size_t k) {
        try {
            slot[k] = gen(indices[k]);
        } catch (...) {
            err[k] = std::current_exception();
        }
    });
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::size_t want = ipow(dim, weight(indices[k]));
        if (slot[k].rows() != want || slot[k].cols() != want)
            throw InputError("form: block size mismatch");
        if (kind == CoalgebraKind::group_like && !is_diagonal(slot[k]))
            throw InputError("form: group-like forms are diagonal");
        blocks_.emplace(indices[k], std::move(slot[k]));
    }
}

BiForm BiForm::unit(int level, std::size_t dim, int cutoff, CoalgebraKind kind) {
    return BiForm(level, dim, cutoff, kind,
                  [dim](const MultiIndex& R) { return Matrix::identity(ipow(dim, weight(R))); });
}

const Matrix& BiForm::block(const MultiIndex& R) const {
    auto it = blocks_.find(R);
    if (it == blocks_.end()) throw InputError("form: no block at the requested multidegree");
    return it->second;
}

Rational BiForm::scalar_00() const {
    return block(MultiIndex(static_cast<std::size_t>(level_), 0)).at(0, 0);
}

bool BiForm::operator==(const BiForm& o) const {
    return level_ == o.level_ && dim_ == o.dim_ && cutoff_ == o.cutoff_ && kind_ == o.kind_ &&
           blocks_ == o.blocks_;
}

bool BiForm::is_unit() const {
    for (const auto& [R, m] : blocks_)
        if (!m.is_identity()) return false;
    return true;
}

void require_same_shape(const BiForm& a, const BiForm& b, const char* what) {
    if (a.level() != b.level() || a.dim() != b.dim() || a.cutoff() != b.cutoff() ||
        a.kind() != b.kind())
        throw InputError(std::string(what) + ": form shapes differ");
}

Cochain form_to_cochain(const BiForm& chi) {
    return Cochain(chi.level(), chi.dim(), chi.cutoff(),
                   [&](const MultiIndex& R) { return chi.block(R); });
}

BiForm cochain_to_form(const Cochain& psi, CoalgebraKind kind) {
    return BiForm(psi.level(), psi.dim(), psi.cutoff(), kind,
                  [&](const MultiIndex& R) { return psi.block(R); });
}

BiForm convolution(const BiForm& chi, const BiForm& zeta) {
    require_same_shape(chi, zeta, "convolution");
    return BiForm(chi.level(), chi.dim(), chi.cutoff(), chi.kind(),
                  [&](const MultiIndex& R) { return zeta.block(R) * chi.block(R); });
}

BiForm convolution_inverse(const BiForm& chi) {
    return BiForm(chi.level(), chi.dim(), chi.cutoff(), chi.kind(),
                  [&](const MultiIndex& R) { return chi.block(R).inverse(); });
}

BiForm face(int i, const BiForm& chi) {
    const int n = chi.level();
    if (i < 0 || i > n + 1) throw InputError("face: index out of range");
    return BiForm(n + 1, chi.dim(), chi.cutoff(), chi.kind(), [&](const MultiIndex& R) {
        if (i == 0) {
            MultiIndex rest(R.begin() + 1, R.end());
            return kron(Matrix::identity(ipow(chi.dim(), R.front())), chi.block(rest));
        }
        if (i == n + 1) {
            MultiIndex head(R.begin(), R.end() - 1);
            return kron(chi.block(head), Matrix::identity(ipow(chi.dim(), R.back())));
        }
        return chi.block(merge_at(R, i));
    });
}

BiForm degeneracy(int i, const BiForm& chi) {
    const int n = chi.level();
    if (n < 1) throw InputError("degeneracy: level must be positive");
    if (i < 0 || i > n - 1) throw InputError("degeneracy: index out of range");
    return BiForm(n - 1, chi.dim(), chi.cutoff(), chi.kind(),
                  [&](const MultiIndex& R) { return chi.block(insert_zero_at(R, i)); });
}

BiForm bialgebra_coboundary(const BiForm& chi) {
    const int n = chi.level();
    std::vector<BiForm> even, odd;
    for (int i = 0; i <= n + 1; ++i) (i % 2 == 0 ? even : odd).push_back(face(i, chi));
    // d₀∗d₂∗… ascending; …∗d₃∗d₁ descending.
    BiForm even_conv = even.front();
    for (std::size_t k = 1; k < even.size(); ++k) even_conv = convolution(even_conv, even[k]);
    BiForm odd_conv = odd.back();
    for (std::size_t k = odd.size() - 1; k-- > 0;) odd_conv = convolution(odd_conv, odd[k]);
    return convolution(convolution_inverse(even_conv), odd_conv);
}

BiForm form_primitive(const BiForm& chi) {
    if (chi.level() != 2) throw InputError("form primitive: level-2 form required");
    const std::size_t d = chi.dim();
    const int D = chi.cutoff();
    std::vector<Matrix> lam;
    lam.push_back(Matrix::scalar_matrix(1, Rational(1) / chi.scalar_00()));
    for (int n = 0; n + 1 <= D; ++n)
        lam.push_back(chi.block(MultiIndex{n, 1}) * kron(lam.back(), Matrix::identity(d)));
    // dλ must reproduce χ blockwise, else χ was no convolution cocycle.
    for (const auto& [R, m] : chi.blocks()) {
        const int r = R[0], s = R[1];
        Matrix dl = lam[static_cast<std::size_t>(r + s)] *
                    kron(lam[static_cast<std::size_t>(r)], lam[static_cast<std::size_t>(s)])
                        .inverse();
        if (dl != m)
            throw PropertyError("form primitive: dλ ≠ χ at block (" + std::to_string(r) + "," +
                                std::to_string(s) + ") (χ is not a convolution cocycle)");
    }
    return BiForm(1, d, D, chi.kind(),
                  [&](const MultiIndex& R) { return lam[static_cast<std::size_t>(R[0])]; });
}

Cochain digamma(const BiForm& chi) {
    const std::size_t d = chi.dim();
    if (chi.kind() == CoalgebraKind::group_like) {
        // Ϝχ(w) = χ(w)·χ⁻¹(w)·w per basis word: the per-word products.
        return Cochain(chi.level(), d, chi.cutoff(), [&](const MultiIndex& R) {
            const Matrix& x = chi.block(R);
            const Matrix xi = x.inverse();
            Matrix m(x.rows(), x.cols());
            for (std::size_t w = 0; w < x.rows(); ++w) m.at(w, w) = x.at(w, w) * xi.at(w, w);
            return m;
        });
    }
    // Matrix coalgebra: coefficient of t_u^v-word in Ϝχ(t_i^j-word) is
    // X[u,i]·X⁻¹[j,v]; letters tᵢʲ live at index j·d+i of V*⊗V.
    return Cochain(chi.level(), d * d, chi.cutoff(), [&](const MultiIndex& R) {
        const Matrix& x = chi.block(R);
        const Matrix xi = x.inverse();
        const std::size_t k = static_cast<std::size_t>(weight(R));
        const std::size_t dk = ipow(d, k);
        auto de = shuffle_perm_map(k, d, d);  // interleaved → (upper word, lower word)
        std::vector<std::size_t> inter(de.size());
        for (std::size_t p = 0; p < de.size(); ++p) inter[de[p]] = p;
        Matrix m(dk * dk, dk * dk);
        for (std::size_t u = 0; u < dk; ++u)
            for (std::size_t v = 0; v < dk; ++v) {
                const std::size_t row = inter[v * dk + u];
                for (std::size_t i = 0; i < dk; ++i) {
                    if (x.at(u, i) == 0) continue;
                    for (std::size_t j = 0; j < dk; ++j)
                        m.at(row, inter[j * dk + i]) = x.at(u, i) * xi.at(j, v);
                }
            }
        return m;
    });
}

bool is_counital(const BiForm& chi) {
    for (const auto& [R, m] : chi.blocks()) {
        bool boundary = R.empty();
        for (int r : R) boundary = boundary || r == 0;
        if (boundary && !m.is_identity()) return false;
    }
    return true;
}

BiForm random_biform(int level, std::size_t dim, int cutoff, std::uint64_t seed,
                     CoalgebraKind kind, bool counital) {
    auto indices = multi_indices(level, cutoff);
    std::map<MultiIndex, std::uint64_t> block_seed;
    std::mt19937_64 master(seed);
    for (const auto& R : indices) block_seed[R] = master();
    return BiForm(level, dim, cutoff, kind, [&, kind, counital, dim](const MultiIndex& R) {
        const std::size_t n = ipow(dim, weight(R));
        bool boundary = R.empty();
        for (int r : R) boundary = boundary || r == 0;
        if (counital && boundary) return Matrix::identity(n);
        std::mt19937_64 rng(block_seed.at(R));
        std::uniform_int_distribution<long> entry(-3, 3);
        while (true) {
            Matrix m(n, n);
            if (kind == CoalgebraKind::group_like) {
                for (std::size_t i = 0; i < n; ++i) {
                    long v = 0;
                    while (v == 0) v = entry(rng);
                    m.at(i, i) = v;
                }
                return m;
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
            try {
                m.inverse();
            } catch (const PropertyError&) {
                continue;
            }
            return m;
        }
    });
}

}  // namespace conic
