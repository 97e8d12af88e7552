#include "engine/cochain_ops.hpp"

#include <random>
#include <string>

#include "engine/error.hpp"

namespace conic {

namespace {

std::string index_str(const MultiIndex& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + ")";
}

std::size_t dpow(const Cochain& c, int e) {
    return ipow(c.dim(), static_cast<std::size_t>(e));
}

} // namespace

Cochain coface(int i, const Cochain& psi) {
    const int n = psi.level();
    if (i < 0 || i > n + 1) throw InputError("coface index out of range");
    return Cochain(n + 1, psi.dim(), psi.cutoff(), [&, i, n](const MultiIndex& r) -> Matrix {
        if (i == 0) {
            MultiIndex rest(r.begin() + 1, r.end());
            return kron(Matrix::identity(dpow(psi, r[0])), psi.block(rest));
        }
        if (i == n + 1) {
            MultiIndex head(r.begin(), r.end() - 1);
            return kron(psi.block(head), Matrix::identity(dpow(psi, r[n])));
        }
        // Merge the two slots the multiplication mᵢ glues: entries i−1 and i
        // (0-based) of R; the flat identification keeps the block verbatim.
        MultiIndex merged;
        merged.reserve(n);
        for (int k = 0; k <= n; ++k) {
            if (k == i - 1) {
                merged.push_back(r[k] + r[k + 1]);
            } else if (k != i) {
                merged.push_back(r[k]);
            }
        }
        return psi.block(merged);
    });
}

Cochain codegeneracy(int i, const Cochain& psi) {
    const int n = psi.level();
    if (n < 1) throw InputError("codegeneracy needs level ≥ 1");
    if (i < 0 || i > n - 1) throw InputError("codegeneracy index out of range");
    return Cochain(n - 1, psi.dim(), psi.cutoff(), [&, i](const MultiIndex& r) {
        MultiIndex s(r);
        s.insert(s.begin() + i, 0);
        return psi.block(s);
    });
}

Coboundary coboundary(const Cochain& psi) {
    const int n = psi.level();
    std::vector<Cochain> odd, even;
    for (int i = 0; i <= n + 1; ++i)
        (i % 2 ? odd : even).push_back(coface(i, psi));
    // ∂₋ψ = δ₁ψ·δ₃ψ·… (ascending), ∂₊ψ = …·δ₂ψ·δ₀ψ (descending).
    Cochain minus = odd.front();
    for (std::size_t k = 1; k < odd.size(); ++k) minus = minus.compose(odd[k]);
    Cochain plus = even.back();
    for (std::size_t k = even.size() - 1; k-- > 0;) plus = plus.compose(even[k]);
    Cochain full = minus.compose(plus.inverse());
    return Coboundary{std::move(full), std::move(minus), std::move(plus)};
}

bool is_counital(const Cochain& psi) {
    if (psi.level() == 0) return psi.scalar_00() == 1;
    for (const auto& [r, m] : psi.blocks()) {
        bool has_zero = false;
        for (int x : r)
            if (x == 0) has_zero = true;
        if (has_zero && !m.is_identity()) return false;
    }
    return true;
}

Matrix psi13_block(const Cochain& psi, int r, int s, int t) {
    const Matrix f = flip_perm(psi.dim(), s, t);
    const Matrix finv = flip_perm(psi.dim(), t, s);
    const Matrix mid = kron(psi.block(MultiIndex{r, t}), Matrix::identity(dpow(psi, s)));
    const Matrix ir = Matrix::identity(dpow(psi, r));
    return kron(ir, finv) * mid * kron(ir, f);
}

CochainClass classify(const Cochain& psi) {
    CochainClass c;
    c.scalar_00 = psi.scalar_00();
    c.is_counital = is_counital(psi);
    c.is_cocycle = coboundary(psi).full.is_identity();
    if (psi.level() == 2) {
        const Cochain d1 = coface(1, psi), d2 = coface(2, psi);
        const Cochain p12 = coface(3, psi), p23 = coface(0, psi);
        bool bica = true, abica = true;
        for (const auto& [R, unused] : d1.blocks()) {
            const int r = R[0], s = R[1], t = R[2];
            const Matrix p13 = psi13_block(psi, r, s, t);
            if (d1.block(R) != p23.block(R) * p13 || d2.block(R) != p12.block(R) * p13)
                bica = false;
            if (d1.block(R) != p13 * p23.block(R) || d2.block(R) != p13 * p12.block(R))
                abica = false;
            if (!bica && !abica) break;
        }
        c.is_bicharacter = bica;
        c.is_antibicharacter = abica;
    }
    return c;
}

Cochain extend_seed(const Matrix& seed, bool anti, int cutoff) {
    std::size_t d = 1;
    while (d * d < seed.rows()) ++d;
    if (d * d != seed.rows() || !seed.is_square() || d < 1)
        throw InputError("seed must be square of size dim²");
    try {
        (void)seed.inverse();
    } catch (const PropertyError&) {
        throw PropertyError("seed matrix is singular");
    }

    auto id = [&](int k) { return Matrix::identity(ipow(d, static_cast<std::size_t>(k))); };
    std::map<MultiIndex, Matrix> blocks;
    auto put = [&](int r, int s, Matrix m) { blocks.emplace(MultiIndex{r, s}, std::move(m)); };
    auto get = [&](int r, int s) -> const Matrix& { return blocks.at(MultiIndex{r, s}); };

    for (int k = 0; k <= cutoff; ++k) {
        put(0, k, id(k));
        if (k > 0) put(k, 0, id(k));
    }
    if (cutoff >= 2) put(1, 1, seed);

    // ψ₁₃ conjugated into the (r,s,t) slot split, from blocks built so far.
    auto p13 = [&](int r, int s, int t) {
        const Matrix mid = kron(get(r, t), id(s));
        return kron(id(r), flip_perm(d, t, s)) * mid * kron(id(r), flip_perm(d, s, t));
    };

    // Fill the first row ψ_{1,t} by splitting the second slot as (t−1)+1,
    // then each column upward by splitting the first slot as 1+(r−1):
    // the two factorization identities a bicharacter must satisfy, read as
    // recursions (order-reversed for the anti case).
    for (int t = 2; t + 1 <= cutoff; ++t) {
        const Matrix a = kron(get(1, t - 1), id(1));  // ψ₁₂ at (1, t−1, 1)
        const Matrix b = p13(1, t - 1, 1);
        put(1, t, anti ? b * a : a * b);
    }
    for (int t = 1; t <= cutoff; ++t) {
        for (int r = 2; r + t <= cutoff; ++r) {
            const Matrix a = kron(id(1), get(r - 1, t));  // ψ₂₃ at (1, r−1, t)
            const Matrix b = p13(1, r - 1, t);
            put(r, t, anti ? b * a : a * b);
        }
    }
    return Cochain::from_blocks(2, d, cutoff, std::move(blocks));
}

bool seed_yang_baxter(const Matrix& seed) {
    std::size_t d = 1;
    while (d * d < seed.rows()) ++d;
    if (d * d != seed.rows() || !seed.is_square()) throw InputError("seed must be dim² square");
    const Matrix i1 = Matrix::identity(d), f = flip_perm(d, 1, 1);
    const Matrix m12 = kron(seed, i1), m23 = kron(i1, seed);
    const Matrix m13 = kron(i1, f) * m12 * kron(i1, f);
    return m12 * m13 * m23 == m23 * m13 * m12;
}

bool seed_commuting_legs(const Matrix& seed) {
    std::size_t d = 1;
    while (d * d < seed.rows()) ++d;
    if (d * d != seed.rows() || !seed.is_square()) throw InputError("seed must be dim² square");
    const Matrix i1 = Matrix::identity(d);
    const Matrix m12 = kron(seed, i1), m23 = kron(i1, seed);
    return m12 * m23 == m23 * m12;
}

Cochain primitive(const Cochain& psi, const Matrix& varpi) {
    if (psi.level() != 2) throw InputError("primitive expects a level-2 cochain");
    if (varpi.rows() != psi.dim() || varpi.cols() != psi.dim())
        throw InputError("ϖ must be dim×dim");
    const int D = psi.cutoff();
    std::vector<Matrix> theta(static_cast<std::size_t>(D) + 1);
    Matrix t0(1, 1);
    t0.at(0, 0) = Rational(1) / psi.scalar_00();
    theta[0] = t0;
    if (D >= 1) theta[1] = varpi;
    for (int n = 1; n + 1 <= D; ++n)
        theta[n + 1] = psi.block(MultiIndex{n, 1}) * kron(theta[n], varpi);

    Cochain out(1, psi.dim(), D,
                [&](const MultiIndex& r) { return theta[static_cast<std::size_t>(r[0])]; });

    // ∂θ = ψ blockwise — fails exactly when ψ was not a cocycle.
    const Cochain thinv = out.inverse();
    for (const auto& [R, m] : psi.blocks()) {
        const int r = R[0], s = R[1];
        const Matrix lhs = out.block(MultiIndex{r + s}) *
                           kron(thinv.block(MultiIndex{r}), thinv.block(MultiIndex{s}));
        if (lhs != m)
            throw PropertyError("primitive: ∂θ ≠ ψ at block " + index_str(R) +
                                " (ψ is not a cocycle)");
    }
    return out;
}

Cochain primitive(const Cochain& psi) {
    return primitive(psi, Matrix::identity(psi.dim()));
}

Cochain coadjoint(const Cochain& psi) {
    return Cochain(psi.level(), psi.dim(), psi.cutoff(), [&](const MultiIndex& r) -> Matrix {
        try {
            return psi.block(r).transpose().inverse();
        } catch (const PropertyError&) {
            throw PropertyError("coadjoint: singular block at " + index_str(r));
        }
    });
}

Cochain product_cochain(const Cochain& a, const Cochain& b) {
    if (a.level() != b.level() || a.cutoff() != b.cutoff())
        throw InputError("product_cochain needs equal level and cutoff");
    return Cochain(a.level(), a.dim() * b.dim(), a.cutoff(), [&](const MultiIndex& r) {
        const std::size_t k = static_cast<std::size_t>(weight(r));
        const Matrix t = shuffle_perm(k, a.dim(), b.dim());
        return t.transpose() * kron(a.block(r), b.block(r)) * t;
    });
}

namespace {
Cochain star_conjugator(const Cochain& psi) {
    // (θ⊗θ) as a level-2 cochain for θ = primitive(ψ, 𝕀).
    const Cochain th = primitive(psi);
    return Cochain(2, psi.dim(), psi.cutoff(), [&](const MultiIndex& r) {
        return kron(th.block(MultiIndex{r[0]}), th.block(MultiIndex{r[1]}));
    });
}

void require_counital_cocycle(const Cochain& psi, const char* what) {
    const CochainClass c = classify(psi);
    if (!c.is_cocycle || !c.is_counital)
        throw PropertyError(std::string(what) + ": input is not a counital cocycle");
}
} // namespace

Cochain star(const Cochain& psi, const Cochain& phi) {
    require_same_shape(psi, phi, "star");
    if (psi.level() != 2) throw InputError("star is defined on level-2 cochains");
    require_counital_cocycle(psi, "star");
    require_counital_cocycle(phi, "star");
    const Cochain c = star_conjugator(psi);
    return psi.compose(c).compose(phi).compose(c.inverse());
}

Cochain star_inverse(const Cochain& psi) {
    if (psi.level() != 2) throw InputError("star_inverse is defined on level-2 cochains");
    require_counital_cocycle(psi, "star_inverse");
    const Cochain c = star_conjugator(psi);
    return c.inverse().compose(psi.inverse()).compose(c);
}

Cochain cohomology_witness(const Cochain& psi, const Cochain& phi, const Matrix& varpi) {
    require_same_shape(psi, phi, "cohomology_witness");
    const Cochain lam = primitive(psi), chi = primitive(phi);
    const Cochain chinv = chi.inverse();
    Cochain theta(1, psi.dim(), psi.cutoff(), [&](const MultiIndex& r) {
        const std::size_t k = static_cast<std::size_t>(r[0]);
        return lam.block(r) * kron_pow(varpi, k) * chinv.block(r);
    });
    const Cochain thinv = theta.inverse();
    for (const auto& [R, m] : psi.blocks()) {
        const int r = R[0], s = R[1];
        const Matrix lhs = theta.block(MultiIndex{r + s}) * phi.block(R) *
                           kron(thinv.block(MultiIndex{r}), thinv.block(MultiIndex{s}));
        if (lhs != m)
            throw PropertyError("cohomology witness fails at block " + index_str(R));
    }
    return theta;
}

Cochain conjugate_by_iso(const Matrix& f, const Cochain& psi) {
    if (f.rows() != psi.dim() || f.cols() != psi.dim())
        throw InputError("conjugate_by_iso: iso must be dim×dim");
    const Matrix finv = f.inverse();  // throws PropertyError when singular
    return Cochain(psi.level(), psi.dim(), psi.cutoff(), [&](const MultiIndex& r) {
        const std::size_t k = static_cast<std::size_t>(weight(r));
        return kron_pow(f, k) * psi.block(r) * kron_pow(finv, k);
    });
}

Cochain restrict_cochain(const Cochain& psi, const Matrix& inclusion_rows) {
    if (inclusion_rows.cols() != psi.dim())
        throw InputError("restrict: inclusion rows must live in ℚ^dim");
    const std::size_t m = inclusion_rows.rows();
    if (Subspace::span(inclusion_rows).dim() != m)
        throw InputError("restrict: inclusion basis rows are dependent");
    return Cochain(psi.level(), m, psi.cutoff(), [&](const MultiIndex& r) {
        const std::size_t k = static_cast<std::size_t>(weight(r));
        const Matrix bk = kron_pow(inclusion_rows, k);  // m^k induced basis rows
        const Subspace vk = Subspace::span(bk);
        const Subspace im = image(psi.block(r), vk);
        if (!vk.contains(im))
            throw PropertyError("restrict: cochain does not stabilize V^⊗R at R = " +
                                index_str(r));
        // Unique X with ψ·(bkᵀ x) = bkᵀ·(X x): full column rank of bkᵀ.
        return solve(bk.transpose(), psi.block(r) * bk.transpose());
    });
}

Cochain random_cochain(int level, std::size_t dim, int cutoff, std::uint64_t seed,
                       bool counital) {
    // Per-block seeds are drawn sequentially first so the result does not
    // depend on the parallel schedule.
    const auto idx = multi_indices(level, cutoff);
    std::mt19937_64 master(seed);
    std::map<MultiIndex, std::uint64_t> block_seed;
    for (const auto& r : idx) block_seed[r] = master();
    return Cochain(level, dim, cutoff, [&](const MultiIndex& r) -> Matrix {
        const std::size_t n = ipow(dim, static_cast<std::size_t>(weight(r)));
        bool zero_idx = false;
        for (int x : r)
            if (x == 0) zero_idx = true;
        if (counital && (zero_idx || r.empty())) return Matrix::identity(n);
        std::mt19937_64 rng(block_seed.at(r));
        std::uniform_int_distribution<long> entry(-3, 3);
        for (;;) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(entry(rng));
            if (level == 0 && m.at(0, 0) == 0) continue;
            try {
                (void)m.inverse();
                return m;
            } catch (const PropertyError&) {
            }
        }
    });
}

} // namespace conic
