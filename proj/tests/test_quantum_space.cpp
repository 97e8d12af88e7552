#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "engine/error.hpp"
#include "engine/quantum_space.hpp"

using namespace conic;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

Relation make_rel(std::vector<std::pair<Word, Rational>> terms) {
    Relation r;
    r.degree = static_cast<int>(terms.front().first.size());
    for (auto& [w, c] : terms) r.terms[w] = c;
    return r;
}

// k[a,b]: commutative plane.
QuantumSpace plane(int cutoff) {
    return make_space({"a", "b"},
                      ideal_from_relations({make_rel({{{0, 1}, 1}, {{1, 0}, -1}})}, 2, cutoff),
                      cutoff);
}

// Grassmann algebra on two generators.
QuantumSpace grassmann(int cutoff) {
    return make_space({"a", "b"},
                      ideal_from_relations({make_rel({{{0, 0}, 1}}), make_rel({{{1, 1}, 1}}),
                                            make_rel({{{0, 1}, 1}, {{1, 0}, 1}})},
                                           2, cutoff),
                      cutoff);
}

// Free algebra on one generator.
QuantumSpace kspace(int cutoff) { return free_space({"z"}, cutoff); }

// One generator with e² = 0.
QuantumSpace uspace(int cutoff) {
    return make_space({"e"}, ideal_from_relations({make_rel({{{0, 0}, 1}})}, 1, cutoff), cutoff);
}

const std::vector<std::vector<long>> plane_w = {{0, 1}, {0, 0}};

Matrix diag_seed(const std::vector<std::vector<long>>& w, const Rational& q, std::size_t dim) {
    Matrix m(dim * dim, dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            m.at(a * dim + b, a * dim + b) = rat_pow(q, w[a][b]);
    return m;
}

Cochain psi_q(const Rational& q, int cutoff) {
    return extend_seed(diag_seed(plane_w, q, 2), false, cutoff);
}

std::vector<Rational> unit_vec(std::size_t len, std::size_t at) {
    std::vector<Rational> v(len);
    v[at] = 1;
    return v;
}

}  // namespace

TEST_CASE("ideal construction and errors") {
    CHECK(free_space({"a", "b"}, 3).ideal == GradedIdeal::zero(2, 3));
    CHECK_THROWS_AS(ideal_from_relations({make_rel({{{0}, 1}})}, 2, 3), InputError);
    CHECK_THROWS_AS(ideal_from_relations({make_rel({{{0, 2}, 1}})}, 2, 3), InputError);
    CHECK_THROWS_AS(ideal_from_relations({make_rel({{{0, 1}, 0}})}, 2, 3), InputError);
    CHECK_THROWS_AS(ideal_from_relations({make_rel({{{0, 1, 0, 1}, 1}})}, 2, 3), InputError);

    // Direct components must be multiplicatively closed.
    std::vector<Subspace> bad{Subspace(1), Subspace(2),
                              Subspace::span(Matrix::from_rows({{Q(0), Q(1), Q(0), Q(0)}})),
                              Subspace(8)};
    CHECK_THROWS_AS(GradedIdeal(bad, 2, Provenance::direct), PropertyError);
    CHECK_NOTHROW(GradedIdeal(bad, 2, Provenance::generated));
}

TEST_CASE("hilbert series of the stock examples") {
    CHECK(hilbert(free_space({"a", "b"}, 4)) == std::vector<std::size_t>{1, 2, 4, 8, 16});
    CHECK(hilbert(plane(4)) == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(hilbert(grassmann(4)) == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(hilbert(kspace(4)) == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(hilbert(uspace(4)) == std::vector<std::size_t>{1, 1, 0, 0, 0});

    // Plane ideal dimensions follow the closed count 2ⁿ − (n+1).
    QuantumSpace p = plane(4);
    for (int n = 2; n <= 4; ++n)
        CHECK(p.ideal.component(n).dim() == ipow(2, n) - static_cast<std::size_t>(n) - 1);
}

TEST_CASE("normal form") {
    QuantumSpace p = plane(3);
    // RREF pivot sits on ab, so ab reduces to ba and ba is already reduced.
    auto nf_ab = normal_form(p, 2, unit_vec(4, 1));
    CHECK(nf_ab == unit_vec(4, 2));
    CHECK(normal_form(p, 2, unit_vec(4, 2)) == unit_vec(4, 2));

    std::vector<Rational> rel{Q(0), Q(1), Q(-1), Q(0)};
    CHECK(normal_form(p, 2, rel) == std::vector<Rational>(4));
    // Linear and idempotent.
    std::vector<Rational> v{Q(1), Q(2), Q(3), Q(4)};
    auto nf = normal_form(p, 2, v);
    CHECK(normal_form(p, 2, nf) == nf);
    CHECK(nf == std::vector<Rational>{Q(1), Q(0), Q(5), Q(4)});

    QuantumSpace f = free_space({"a", "b"}, 3);
    CHECK(normal_form(f, 2, v) == v);
    CHECK_THROWS_AS(normal_form(p, 4, std::vector<Rational>(16)), InputError);
    CHECK_THROWS_AS(normal_form(p, 2, std::vector<Rational>(5)), InputError);
}

TEST_CASE("quadraticity") {
    CHECK(is_quadratic(plane(4)));
    CHECK(is_quadratic(grassmann(4)));
    CHECK(is_quadratic(uspace(3)));
    CHECK(is_quadratic(kspace(3)));
    QuantumSpace cubic = make_space(
        {"a", "b"}, ideal_from_relations({make_rel({{{0, 0, 1}, 1}})}, 2, 3), 3);
    CHECK(!is_quadratic(cubic));
}

TEST_CASE("duality frozen examples") {
    QuantumSpace k = kspace(4), u = uspace(4);
    CHECK(dual(k).ideal == u.ideal);
    CHECK(dual(u).ideal == k.ideal);
    CHECK(dual(k).generators == std::vector<std::string>{"z*"});

    QuantumSpace dp = dual(plane(4));
    CHECK(hilbert(dp) == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(dp.ideal.component(2) ==
          Subspace::span(Matrix::from_rows({{Q(1), Q(0), Q(0), Q(0)},
                                            {Q(0), Q(0), Q(0), Q(1)},
                                            {Q(0), Q(1), Q(1), Q(0)}})));
    CHECK(dual(dp).ideal == plane(4).ideal);
    CHECK(dual(grassmann(4)).ideal == plane(4).ideal);
}

TEST_CASE("products: frozen behavior of the six kinds") {
    QuantumSpace p = plane(3), g = grassmann(3), k = kspace(3), u = uspace(3);

    QuantumSpace ff = product(ProductKind::circ, free_space({"a", "b"}, 3),
                              free_space({"c", "d"}, 3));
    CHECK(ff.dim() == 4);
    CHECK(ff.ideal == GradedIdeal::zero(4, 3));
    CHECK(ff.generators[1] == "(a,d)");

    // 𝒦 ▷ A reproduces A; A ▷ 𝒰 reproduces the dual.
    CHECK(product(ProductKind::rtri, k, p).ideal == p.ideal);
    CHECK(product(ProductKind::rtri, k, g).ideal == g.ideal);
    CHECK(product(ProductKind::rtri, p, u).ideal == dual(p).ideal);
    CHECK(product(ProductKind::rtri, g, u).ideal == dual(g).ideal);

    // (A⊙B)^! matches A^!∘B^! in dimensions.
    CHECK(hilbert(dual(product(ProductKind::odot, p, g))) ==
          hilbert(product(ProductKind::circ, dual(p), dual(g))));

    // ▷ agrees with • composed with dualization of the left factor.
    CHECK(product(ProductKind::rtri, p, p).ideal ==
          product(ProductKind::bullet, dual(p), p).ideal);
    CHECK(product(ProductKind::rtri, g, p).ideal ==
          product(ProductKind::bullet, dual(g), p).ideal);

    QuantumSpace cubic = make_space(
        {"a", "b"}, ideal_from_relations({make_rel({{{0, 0, 1}, 1}})}, 2, 3), 3);
    CHECK_THROWS_AS(product(ProductKind::bullet, cubic, p), InputError);
    CHECK_THROWS_AS(product(ProductKind::circ, plane(3), plane(4)), InputError);
}

TEST_CASE("cohom frozen examples") {
    QuantumSpace p = plane(3);
    QuantumSpace endp = cohom(p, p);
    CHECK(endp.dim() == 4);
    CHECK(endp.generators ==
          std::vector<std::string>{"z_0^0", "z_1^0", "z_0^1", "z_1^1"});
    CHECK(hilbert(endp)[2] == 13);

    CHECK(cohom(kspace(3), p).ideal == p.ideal);
    QuantumSpace freeh = cohom(free_space({"c", "d"}, 3), free_space({"a", "b"}, 3));
    CHECK(freeh.ideal == GradedIdeal::zero(4, 3));
}

TEST_CASE("admissibility") {
    QuantumSpace f = free_space({"a", "b"}, 3), p = plane(4);
    CHECK(is_admissible(f, random_cochain(2, 2, 3, 5, false)).ok);
    CHECK(is_admissible(f, random_cochain(1, 2, 3, 5, false)).ok);

    Cochain psi = psi_q(Q(3, 2), 4);
    CHECK(is_admissible(p, psi).ok);
    // Its primitive is not level-1 admissible: it rescales ab but not ba.
    CHECK(!is_admissible(p, primitive(psi)).ok);

    CHECK_THROWS_AS(is_admissible(p, random_cochain(0, 2, 4, 5, false)), InputError);
    CHECK_THROWS_AS(is_admissible(p, random_cochain(2, 3, 4, 5, false)), InputError);
}

TEST_CASE("admissibility does not pass to the coboundary") {
    // On k⟨a,b⟩/(ab): θ identity except in degree 3, where abx ↔ xab.
    QuantumSpace q = make_space(
        {"a", "b"}, ideal_from_relations({make_rel({{{0, 1}, 1}})}, 2, 3), 3);
    std::vector<std::size_t> p(8);
    for (std::size_t i = 0; i < 8; ++i) p[i] = i;
    p[1] = 2; p[2] = 1; p[3] = 5; p[5] = 3;  // aab↔aba, abb↔bab
    Cochain theta(1, 2, 3, [&](const MultiIndex& r) {
        return r[0] == 3 ? perm_matrix(p) : Matrix::identity(ipow(2, r[0]));
    });
    CHECK(is_admissible(q, theta).ok);
    CHECK(!is_admissible(q, coboundary(theta).full).ok);
}

TEST_CASE("second admissibility") {
    QuantumSpace p = plane(4);
    CHECK(is_second_admissible(p, Cochain::identity(2, 2, 4)).ok);
    Cochain psi = psi_q(Q(3, 2), 4);
    CHECK(is_second_admissible(p, psi).ok);

    // Level-1 variant for a tensor-power cochain whose matrix fixes the ideal.
    Matrix swap = Matrix::from_rows({{Q(0), Q(1)}, {Q(1), Q(0)}});
    Cochain theta(1, 2, 4, [&](const MultiIndex& r) { return kron_pow(swap, r[0]); });
    CHECK(is_admissible(p, theta).ok);
    CHECK(is_second_admissible(p, theta).ok);
}

TEST_CASE("twist of the plane and the Grassmann algebra") {
    const Rational q = Q(3, 2);
    QuantumSpace p = plane(4);
    Cochain psi = psi_q(q, 4);

    CHECK(twist(p, Cochain::identity(2, 2, 4)).ideal == p.ideal);

    QuantumSpace pq = twist(p, psi);
    CHECK(pq.ideal.component(2) ==
          Subspace::span(Matrix::from_rows({{Q(0), Q(1), -q, Q(0)}})));
    CHECK(hilbert(pq) == hilbert(p));
    CHECK(is_quadratic(pq));

    QuantumSpace gq = twist(grassmann(4), psi);
    CHECK(gq.ideal.component(2) ==
          Subspace::span(Matrix::from_rows({{Q(1), Q(0), Q(0), Q(0)},
                                            {Q(0), Q(0), Q(0), Q(1)},
                                            {Q(0), Q(1), q, Q(0)}})));
    CHECK(hilbert(gq) == hilbert(grassmann(4)));
}

TEST_CASE("twist refusals") {
    QuantumSpace p = plane(3);
    // Non-cocycle bicharacter extension (seed violates the braid relation).
    Matrix bad = Matrix::from_rows({{Q(1), Q(1), Q(0), Q(0)},
                                    {Q(0), Q(1), Q(0), Q(0)},
                                    {Q(0), Q(0), Q(1), Q(0)},
                                    {Q(1), Q(0), Q(0), Q(1)}});
    CHECK(!seed_yang_baxter(bad));
    CHECK_THROWS_WITH_AS(twist(free_space({"a", "b"}, 3), extend_seed(bad, false, 3)),
                         "twist: cochain is not a cocycle", PropertyError);

    // The flip bicharacter is a counital cocycle but moves I₂⊗A₁ off itself.
    Cochain fl = extend_seed(flip_perm(2, 1, 1), false, 3);
    CHECK(classify(fl).is_cocycle);
    CHECK(!is_admissible(p, fl).ok);
    CHECK_THROWS_AS(twist(p, fl), PropertyError);

    CHECK_THROWS_AS(twist(p, random_cochain(1, 2, 3, 3, true)), InputError);
}

TEST_CASE("twisted ideal equals the kernel of normal form after theta") {
    const Rational q = Q(3, 2);
    for (QuantumSpace a : {plane(4), grassmann(4)}) {
        Cochain psi = psi_q(q, 4);
        QuantumSpace tw = twist(a, psi);
        Cochain theta = primitive(psi);
        for (int n = 0; n <= 4; ++n) {
            // Independent path: matrix of v ↦ normal_form(θₙ v), then its kernel.
            const std::size_t dn = ipow(2, n);
            Matrix nf_after_theta(dn, dn);
            for (std::size_t j = 0; j < dn; ++j) {
                std::vector<Rational> col(dn);
                for (std::size_t i = 0; i < dn; ++i) col[i] = theta.block_deg(n).at(i, j);
                auto red = normal_form(a, n, col);
                for (std::size_t i = 0; i < dn; ++i) nf_after_theta.at(i, j) = red[i];
            }
            CHECK(tw.ideal.component(n) == kernel(nf_after_theta));
        }
    }
}

TEST_CASE("equal mod ideal") {
    QuantumSpace p = plane(3);
    Cochain psi = psi_q(Q(3, 2), 3);
    CHECK(equal_mod_ideal(p, psi, psi));

    // Shift a column of block (2,1) by (ab − ba)⊗a: invisible in the quotient.
    Cochain shifted(2, 2, 3, [&](const MultiIndex& R) {
        Matrix m = psi.block(R);
        if (R == MultiIndex{2, 1}) {
            m.at(1 * 2 + 0, 3) += Q(7);  // ab⊗a row
            m.at(2 * 2 + 0, 3) -= Q(7);  // ba⊗a row
        }
        return m;
    });
    CHECK(equal_mod_ideal(p, psi, shifted));
    CHECK(psi != shifted);

    // A shift along a normal-form word is visible.
    Cochain visible(2, 2, 3, [&](const MultiIndex& R) {
        Matrix m = psi.block(R);
        if (R == MultiIndex{2, 1}) m.at(2 * 2 + 0, 3) += Q(7);  // ba⊗a alone
        return m;
    });
    CHECK(!equal_mod_ideal(p, psi, visible));
}

TEST_CASE("gauge transformations") {
    const Rational q = Q(3, 2), r = Q(5, 2);
    QuantumSpace p = plane(3);
    Cochain psi = psi_q(q, 3);
    Cochain phi = extend_seed(diag_seed({{1, 0}, {0, 2}}, r, 2), false, 3);
    CHECK(is_admissible(p, phi).ok);

    GaugeTransformation id_g{Matrix::identity(2), Cochain::identity(2, 2, 3)};
    CHECK(gauge_apply(id_g, p).ideal == p.ideal);

    Matrix swap = Matrix::from_rows({{Q(0), Q(1)}, {Q(1), Q(0)}});
    GaugeTransformation g{swap, psi}, h{Matrix::identity(2), phi};

    QuantumSpace gp = gauge_apply(g, p);
    CHECK(gp.ideal.component(2) ==
          Subspace::span(Matrix::from_rows({{Q(0), Q(1), -Rational(1) / q, Q(0)}})));

    // Round trip and functoriality of application.
    CHECK(gauge_apply(gauge_invert(g), gp).ideal == p.ideal);
    CHECK(gauge_apply(gauge_compose(h, g), p).ideal ==
          gauge_apply(h, gauge_apply(g, p)).ideal);

    // The constructive witness ϑ = α₁^⊗·θ⁻¹ certifies the ideal isomorphism.
    Cochain theta = primitive(psi);
    std::vector<Matrix> witness;
    for (int n = 0; n <= 3; ++n)
        witness.push_back(kron_pow(swap, static_cast<std::size_t>(n)) *
                          theta.block_deg(n).inverse());
    CHECK(verify_gauge_witness(p, gp, witness, WitnessVariant::pairwise).ok);
    CHECK(verify_gauge_witness(p, gp, witness, WitnessVariant::triple).ok);
}

TEST_CASE("gauge witness rejections") {
    QuantumSpace p = plane(3), f = free_space({"a", "b"}, 3);
    std::vector<Matrix> id_family;
    for (int n = 0; n <= 3; ++n) id_family.push_back(Matrix::identity(ipow(2, n)));
    CHECK(verify_gauge_witness(p, p, id_family, WitnessVariant::pairwise).ok);
    CHECK(verify_gauge_witness(p, p, id_family, WitnessVariant::triple).ok);
    auto res = verify_gauge_witness(p, f, id_family, WitnessVariant::pairwise);
    CHECK(!res.ok);

    std::vector<Matrix> bad = id_family;
    bad[2] = Matrix(4, 4);
    CHECK_THROWS_AS(verify_gauge_witness(p, p, bad, WitnessVariant::pairwise), PropertyError);
}

TEST_CASE("dual of twist agrees with twist of dual") {
    const Rational q = Q(3, 2);
    QuantumSpace p = plane(3);
    Cochain psi = psi_q(q, 3);
    CHECK(is_second_admissible(p, psi).ok);
    CHECK(dual(twist(p, psi)).ideal == twist(dual(p), coadjoint(psi)).ideal);
}

TEST_CASE("twist distributes over circ through the paired cochain") {
    const Rational q = Q(3, 2), r = Q(5, 2);
    QuantumSpace a = plane(2), b = grassmann(2);
    Cochain psi = psi_q(q, 2);
    Cochain phi = extend_seed(diag_seed(plane_w, r, 2), false, 2);
    CHECK(twist(product(ProductKind::circ, a, b), product_cochain(psi, phi)).ideal ==
          product(ProductKind::circ, twist(a, psi), twist(b, phi)).ideal);
}

TEST_CASE("coevaluation lands in the ideal") {
    CHECK(coevaluation_well_defined(plane(3), plane(3), 3));
    CHECK(coevaluation_well_defined(grassmann(3), plane(3), 3));
    CHECK(coevaluation_well_defined(plane(3), grassmann(3), 3));
    CHECK(coevaluation_well_defined(kspace(3), plane(3), 3));
}
