#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engine/error.hpp"
#include "engine/matrix.hpp"
#include "engine/rational.hpp"
#include "engine/subspace.hpp"

using namespace conic;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

Matrix M(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return Matrix::from_rows(r);
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n);
        try {
            (void)m.inverse();
            return m;
        } catch (const PropertyError&) {
        }
    }
}

// Independent elimination oracle: plain forward sweep to an (unscaled) row
// echelon form, then scaling and upward back-substitution — a different
// route to the canonical reduced form than the production single pass.
Matrix oracle_rref(Matrix w, std::vector<std::size_t>* pivots_out = nullptr) {
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && w.at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(sel, j), w.at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w.at(i, c) == 0) continue;
            const Rational f = w.at(i, c) / w.at(r, c);
            for (std::size_t j = 0; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const Rational d = w.at(i, pivots[i]);
        for (std::size_t j = 0; j < cols; ++j) w.at(i, j) /= d;
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = w.at(k, pivots[i]);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) w.at(k, j) -= f * w.at(i, j);
        }
    }
    Matrix out(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = w.at(i, j);
    if (pivots_out) *pivots_out = pivots;
    return out;
}

} // namespace

TEST_CASE("rational parse and print round trip") {
    CHECK(rat_str(Q(3, 2)) == "3/2");
    CHECK(rat_str(Q(-6, 4)) == "-3/2");
    CHECK(rat_str(Q(5)) == "5");
    CHECK(rat_str(Q(0)) == "0");
    CHECK(parse_rational("3/2") == Q(3, 2));
    CHECK(parse_rational("-3/2") == Q(-3, 2));
    CHECK(parse_rational("7") == Q(7));
    CHECK(parse_rational("-0/5") == Q(0));
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("a"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int i = 0; i < 200; ++i) {
        Rational x(num(rng), den(rng));
        CHECK(parse_rational(rat_str(x)) == x);
    }
}

TEST_CASE("rational powers") {
    CHECK(rat_pow(Q(3, 2), 0) == Q(1));
    CHECK(rat_pow(Q(3, 2), 3) == Q(27, 8));
    CHECK(rat_pow(Q(3, 2), -2) == Q(4, 9));
    CHECK(rat_pow(Q(0), 4) == Q(0));
    CHECK_THROWS_AS(rat_pow(Q(0), -1), PropertyError);
}

TEST_CASE("rref frozen examples") {
    std::vector<std::size_t> piv;
    CHECK(rref(M({{2, 0}, {0, 2}}), &piv) == Matrix::identity(2));
    CHECK(piv == std::vector<std::size_t>{0, 1});

    CHECK(rref(M({{1, 1}, {1, 1}}), &piv) == M({{1, 1}}));
    CHECK(piv == std::vector<std::size_t>{0});

    // Hand elimination: swap rows, already reduced.
    CHECK(rref(M({{0, 1, 2}, {1, 0, 3}}), &piv) == M({{1, 0, 3}, {0, 1, 2}}));
    CHECK(piv == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref agrees with the independent elimination oracle and is idempotent") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_matrix(rng, dims(rng), dims(rng));
        std::vector<std::size_t> piv, opiv;
        Matrix r = rref(m, &piv);
        CHECK(r == oracle_rref(m, &opiv));
        CHECK(piv == opiv);
        CHECK(rref(r) == r);
        for (std::size_t i = 1; i < piv.size(); ++i) CHECK(piv[i - 1] < piv[i]);
    }
}

TEST_CASE("kernel frozen examples and rank-nullity") {
    CHECK(kernel(Matrix(2, 2)) == Subspace::full(2));
    CHECK(kernel(Matrix::identity(3)) == Subspace(3));
    CHECK(kernel(M({{1, -1}})) == Subspace::span(M({{1, 1}})));

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> dims(1, 7);
    for (int t = 0; t < 60; ++t) {
        Matrix m = random_matrix(rng, dims(rng), dims(rng));
        std::vector<std::size_t> piv;
        Matrix r = rref(m, &piv);
        Subspace k = kernel(m);
        CHECK(piv.size() + k.dim() == m.cols());
        // Every kernel basis row solves M·x = 0.
        for (std::size_t i = 0; i < k.dim(); ++i) {
            std::vector<Rational> x(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) x[j] = k.basis().at(i, j);
            for (const auto& y : m * x) CHECK(y == 0);
        }
    }
}

TEST_CASE("kron frozen examples and the mixed-product identity") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
    CHECK(kron(M({{2}}), M({{0, 1}, {1, 0}})) == M({{0, 2}, {2, 0}}));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
        Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
    CHECK(kron_pow(M({{0, 1}, {1, 0}}), 0) == Matrix::identity(1));
    CHECK(kron_pow(M({{0, 1}, {1, 0}}), 2) ==
          kron(M({{0, 1}, {1, 0}}), M({{0, 1}, {1, 0}})));
}

TEST_CASE("matrix inverse") {
    Matrix a = M({{1, 2}, {3, 4}});
    CHECK(a * a.inverse() == Matrix::identity(2));
    CHECK(a.inverse() * a == Matrix::identity(2));
    CHECK_THROWS_AS(M({{1, 1}, {1, 1}}).inverse(), PropertyError);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_invertible(rng, 4);
        CHECK(m * m.inverse() == Matrix::identity(4));
    }
}

TEST_CASE("subspace sum, containment, perp") {
    Subspace e0 = Subspace::span(M({{1, 0}}));
    Subspace e1 = Subspace::span(M({{0, 1}}));
    CHECK(e0 + e1 == Subspace::full(2));

    // Dot-product oracle: perp of span{(1,−1)} must be orthogonal to (1,−1).
    Subspace p = perp(Subspace::span(M({{1, -1}})));
    CHECK(p == Subspace::span(M({{1, 1}})));
    for (std::size_t i = 0; i < p.dim(); ++i)
        CHECK(p.basis().at(i, 0) * Q(1) + p.basis().at(i, 1) * Q(-1) == 0);

    CHECK(perp(Subspace(3)) == Subspace::full(3));
    CHECK(perp(Subspace::full(3)) == Subspace(3));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = dims(rng);
        Subspace s = Subspace::span(random_matrix(rng, dims(rng), n));
        CHECK(perp(perp(s)) == s);
        CHECK(s.contains(s));
        CHECK((s + s) == s);
        // Orthogonality of every pair of basis rows.
        Subspace sp = perp(s);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t k = 0; k < sp.dim(); ++k) {
                Rational dot(0);
                for (std::size_t j = 0; j < n; ++j)
                    dot += s.basis().at(i, j) * sp.basis().at(k, j);
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("subspace intersection") {
    Subspace a = Subspace::span(M({{1, 0, 0}, {0, 1, 0}}));
    Subspace b = Subspace::span(M({{0, 1, 0}, {0, 0, 1}}));
    CHECK(a.intersect(b) == Subspace::span(M({{0, 1, 0}})));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; ++t) {
        Subspace s = Subspace::span(random_matrix(rng, 3, 5));
        Subspace u = Subspace::span(random_matrix(rng, 3, 5));
        Subspace i = s.intersect(u);
        CHECK(s.contains(i));
        CHECK(u.contains(i));
        CHECK((i + s) == s);
    }
}

TEST_CASE("image and preimage") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_invertible(rng, 4);
        Subspace s = Subspace::span(random_matrix(rng, 2, 4));
        CHECK(image(m, s).dim() == s.dim());
        CHECK(image(m, preimage(m, s)) == s);
        CHECK(preimage(m, image(m, s)) == s);
    }
    // image(M,S) = {M·v : v ∈ S}: spot check a single vector.
    Matrix m = M({{0, 1}, {1, 0}});
    Subspace s = Subspace::span(M({{1, 2}}));
    CHECK(image(m, s) == Subspace::span(M({{2, 1}})));
}

TEST_CASE("tensor of subspaces") {
    Subspace s = Subspace::span(M({{1, 1}}));
    Subspace t = Subspace::span(M({{1, -1}}));
    // kron of rows: (1,1)⊗(1,−1) = (1,−1,1,−1).
    CHECK(tensor(s, t) == Subspace::span(M({{1, -1, 1, -1}})));
    CHECK(tensor(Subspace(2), t) == Subspace(4));
    CHECK(tensor(Subspace::full(2), Subspace::full(3)) == Subspace::full(6));
}

TEST_CASE("reduce is linear, idempotent, and detects membership") {
    std::mt19937_64 rng(8);
    Subspace s = Subspace::span(random_matrix(rng, 3, 6));
    for (int t = 0; t < 20; ++t) {
        Matrix vm = random_matrix(rng, 1, 6);
        std::vector<Rational> v(6);
        for (std::size_t j = 0; j < 6; ++j) v[j] = vm.at(0, j);
        auto red = s.reduce(v);
        CHECK(s.reduce(red) == red);
        // v − reduce(v) lies in s.
        std::vector<Rational> diff(6);
        for (std::size_t j = 0; j < 6; ++j) diff[j] = v[j] - red[j];
        CHECK(s.contains(diff));
    }
    // Basis rows reduce to zero.
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<Rational> v(6);
        for (std::size_t j = 0; j < 6; ++j) v[j] = s.basis().at(i, j);
        CHECK(s.contains(v));
    }
}

TEST_CASE("solve") {
    Matrix a = M({{1, 2}, {3, 4}});
    Matrix b = M({{5}, {6}});
    Matrix x = solve(a, b);
    CHECK(a * x == b);
    // Inconsistent: x + y = 0 and x + y = 1.
    CHECK_THROWS_AS(solve(M({{1, 1}, {1, 1}}), M({{0}, {1}})), PropertyError);
    // Tall full-column-rank system with a consistent right side.
    Matrix c = M({{1, 0}, {0, 1}, {1, 1}});
    Matrix rhs = M({{2}, {3}, {5}});
    CHECK(c * solve(c, rhs) == rhs);
}

TEST_CASE("parallel and serial multiplication kernels agree bit for bit") {
    std::mt19937_64 rng(9);
    for (std::size_t n : {3, 17, 70}) {
        Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CHECK(mul_serial(a, b) == mul_parallel(a, b));
    }
}
