#include "engine/word.hpp"

#include "engine/error.hpp"

namespace conic {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::size_t flat_index(const Word& w, std::size_t dim) {
    std::size_t idx = 0;
    for (int letter : w) {
        if (letter < 0 || static_cast<std::size_t>(letter) >= dim)
            throw InputError("word letter out of range");
        idx = idx * dim + static_cast<std::size_t>(letter);
    }
    return idx;
}

Word word_from_index(std::size_t idx, std::size_t k, std::size_t dim) {
    Word w(k);
    for (std::size_t j = k; j-- > 0;) {
        w[j] = static_cast<int>(idx % dim);
        idx /= dim;
    }
    return w;
}

std::vector<std::size_t> shuffle_perm_map(std::size_t k, std::size_t dimA, std::size_t dimB) {
    const std::size_t total = ipow(dimA * dimB, k);
    std::vector<std::size_t> map(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word mixed = word_from_index(idx, k, dimA * dimB);
        std::size_t ia = 0, ib = 0;
        for (int letter : mixed) {
            ia = ia * dimA + static_cast<std::size_t>(letter) / dimB;
            ib = ib * dimB + static_cast<std::size_t>(letter) % dimB;
        }
        map[idx] = ia * ipow(dimB, k) + ib;
    }
    return map;
}

Matrix shuffle_perm(std::size_t k, std::size_t dimA, std::size_t dimB) {
    return perm_matrix(shuffle_perm_map(k, dimA, dimB));
}

Matrix flip_perm(std::size_t dim, std::size_t s, std::size_t t) {
    const std::size_t ds = ipow(dim, s), dt = ipow(dim, t);
    std::vector<std::size_t> p(ds * dt);
    for (std::size_t u = 0; u < ds; ++u)
        for (std::size_t v = 0; v < dt; ++v) p[u * dt + v] = v * ds + u;
    return perm_matrix(p);
}

} // namespace conic
