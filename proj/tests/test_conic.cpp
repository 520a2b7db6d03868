#include "prymhg/conic.hpp"

#include "prymhg/mpcx.hpp"

#include <doctest.h>

using namespace prymhg;
using namespace prymhg::conic;

static const std::vector<std::string> kVars = {"alpha", "u1", "u2"};

static LaurentPoly c3(std::initializer_list<std::pair<std::vector<long>, Rat>> terms) {
    LaurentPoly f(kVars);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

TEST_CASE("fiberwise quadratic chart") {
    QuadForm3 q = conic_chart(gkz::reference_model());
    CHECK(q.a[0][0] == c3({{{0, 3, 1}, Rat(1)}, {{0, 0, 3}, Rat(1)}}));
    CHECK(q.a[0][1] == c3({{{0, 1, 1}, Rat(1, 2)}}));
    CHECK(q.a[1][1] == c3({{{0, 1, 0}, Rat(1)}}));
    CHECK(q.a[0][2] == c3({{{0, 0, 0}, Rat(1, 2)}}));
    CHECK(q.a[2][2] == c3({{{-1, 0, 0}, Rat(-1)}}));
    CHECK(q.a[1][2].is_zero());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(q.a[(size_t)i][(size_t)j] == q.a[(size_t)j][(size_t)i]);

    // a smooth fiber: determinant evaluates to a nonzero rational
    Rat det_at = lp_eval(quad_det(q), {Rat(1), Rat(1), Rat(1)});
    CHECK(det_at == Rat(-2));
    CHECK(quad_rank_at(q, Rat(1), Rat(1), Rat(1)) == 3);
}

TEST_CASE("diagonalization") {
    QuadForm3 q = conic_chart(gkz::reference_model());
    DiagResult d = diagonalize(q);
    CHECK(d.diag.a[0][0] == c3({{{0, 3, 1}, Rat(1)},
                                {{0, 0, 3}, Rat(1)},
                                {{1, 0, 0}, Rat(1, 4)},
                                {{0, 1, 2}, Rat(-1, 4)}}));
    CHECK(d.diag.a[1][1] == c3({{{0, 1, 0}, Rat(1)}}));
    CHECK(d.diag.a[2][2] == c3({{{-1, 0, 0}, Rat(-1)}}));

    // congruence certificate: S^T Q S equals the diagonal form
    LaurentPoly check[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            LaurentPoly s(kVars);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s = s + d.subs[(size_t)k][(size_t)i] * q.a[(size_t)k][(size_t)l] *
                            d.subs[(size_t)l][(size_t)j];
            check[i][j] = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(check[i][j] == d.diag.a[(size_t)i][(size_t)j]);

    // an already diagonal form passes through unchanged
    DiagResult again = diagonalize(d.diag);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(again.diag.a[(size_t)i][(size_t)j] == d.diag.a[(size_t)i][(size_t)j]);

    // determinants agree up to the square of the substitution determinant,
    // which is 1 for shears
    CHECK(quad_det(d.diag) == quad_det(q));
}

TEST_CASE("discriminant") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    CHECK_FALSE(delta.empty);
    CHECK(delta.f == c3({{{0, 3, 1}, Rat(4)},
                         {{0, 0, 3}, Rat(4)},
                         {{1, 0, 0}, Rat(1)},
                         {{0, 1, 2}, Rat(-1)}}));

    QuadForm3 unit;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            unit.a[(size_t)i][(size_t)j] =
                i == j ? lp_const(kVars, Rat(1)) : LaurentPoly(kVars);
    CHECK(discriminant(unit).empty);
}

TEST_CASE("double cover") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    PlaneCurveModel cover = double_cover(d.diag, delta);
    CHECK(cover.f == c3({{{3, 6, 1}, Rat(4)},
                         {{0, 0, 3}, Rat(4)},
                         {{1, 0, 0}, Rat(1)},
                         {{1, 2, 2}, Rat(-1)}}));
    CHECK(cover.lattice_scale == std::vector<long>{2, 1});

    // the covering map (u1, u2) -> (alpha u1^2, u2) carries the cover onto the base
    LaurentPoly pulled = laurent_substitute(
        delta.f,
        {lp_var(kVars, 0), lp_monomial(kVars, {1, 2, 0}, Rat(1)), lp_var(kVars, 2)});
    CHECK(pulled == cover.f);

    // fiber statistics over a small field: every base point has 0 or 2 lifts
    for (long a = 1; a <= 10; ++a) {
        auto base = gkz::torus_zeros_2d(delta.f, 11, a);
        auto lift = gkz::torus_zeros_2d(cover.f, 11, a);
        long twice = 0;
        for (const auto& [u1, u2] : base) {
            long w = u1;  // u1 / alpha as a residue
            long ainv = 1;
            for (long e = 0; e < 9; ++e) ainv = ainv * a % 11;
            w = w * ainv % 11;
            long chi = 1;
            for (long e = 0; e < 5; ++e) chi = chi * w % 11;
            if (chi == 1) twice += 2;
        }
        CHECK((long)lift.size() == twice);
    }
}

TEST_CASE("projective closures") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    PlaneCurveModel cover = double_cover(d.diag, delta);
    WeightedCurve n = projective_closure(delta, {1, 1, 1}, {"u0", "u1", "u2"});
    CHECK(n.degree == 4);
    LaurentPoly nExpect(std::vector<std::string>{"alpha", "u0", "u1", "u2"});
    nExpect.add_term({0, 0, 3, 1}, Rat(4));
    nExpect.add_term({0, 1, 0, 3}, Rat(4));
    nExpect.add_term({1, 4, 0, 0}, Rat(1));
    nExpect.add_term({0, 1, 1, 2}, Rat(-1));
    CHECK(n.F == nExpect);

    WeightedCurve nt = projective_closure(cover, {1, 1, 3}, {"x0", "x1", "y"});
    CHECK(nt.degree == 9);
    LaurentPoly ntExpect(std::vector<std::string>{"alpha", "x0", "x1", "y"});
    ntExpect.add_term({0, 0, 0, 3}, Rat(4));
    ntExpect.add_term({1, 1, 2, 2}, Rat(-1));
    ntExpect.add_term({3, 0, 6, 1}, Rat(4));
    ntExpect.add_term({1, 9, 0, 0}, Rat(1));
    CHECK(nt.F == ntExpect);
    // weighted homogeneity of every monomial
    for (const auto& [e, c] : nt.F.terms) CHECK(e[1] * 1 + e[2] * 1 + e[3] * 3 == 9);
}

TEST_CASE("genus from the Newton polygon") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    PlaneCurveModel cover = double_cover(d.diag, delta);
    CHECK(genus_from_polytope(delta) == 3);
    CHECK(genus_from_polytope(cover) == 7);

    PlaneCurveModel unit_tri;
    unit_tri.f = c3({{{0, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)}, {{0, 0, 1}, Rat(1)}});
    unit_tri.lattice_scale = {1, 1};
    CHECK(genus_from_polytope(unit_tri) == 0);

    PlaneCurveModel degenerate;
    degenerate.f = c3({{{0, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)}});
    degenerate.lattice_scale = {1, 1};
    CHECK_THROWS(genus_from_polytope(degenerate));
}

TEST_CASE("involution fixed points") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    PlaneCurveModel cover = double_cover(d.diag, delta);
    WeightedCurve nt = projective_closure(cover, {1, 1, 3}, {"x0", "x1", "y"});
    FixedPointData f = involution_fixed_points(nt);
    CHECK(f.count == 4);
    REQUIRE(f.loci.size() == 2);
    CHECK(f.loci[0].find("3 simple roots") != std::string::npos);
    CHECK(f.loci[1].find("(0:1:0)") != std::string::npos);

    long g_base = genus_from_polytope(delta);
    long g_cover = genus_from_polytope(cover);
    CHECK(2 * g_cover - 2 * g_base == 8);
    CHECK(2 * g_cover - 2 == 2 * (2 * g_base - 2) + f.count);
}

TEST_CASE("smoothness certificates") {
    DiagResult d = diagonalize(conic_chart(gkz::reference_model()));
    PlaneCurveModel delta = discriminant(d.diag);
    PlaneCurveModel cover = double_cover(d.diag, delta);
    SmoothnessCert s1 = smoothness_certificate(delta, Rat(1));
    CHECK(s1.resolved);
    CHECK(s1.torus_smooth);
    CHECK_FALSE(s1.resultant1.empty());
    SmoothnessCert s2 = smoothness_certificate(cover, Rat(1));
    CHECK(s2.resolved);
    CHECK(s2.torus_smooth);

    // nodal cubic: smooth on the torus, singular at the origin
    PlaneCurveModel nodal;
    nodal.f = c3({{{0, 0, 2}, Rat(1)}, {{0, 3, 0}, Rat(-1)}, {{0, 2, 0}, Rat(-1)}});
    nodal.lattice_scale = {1, 1};
    SmoothnessCert s3 = smoothness_certificate(nodal, Rat(1));
    CHECK(s3.resolved);
    CHECK(s3.torus_smooth);
    REQUIRE(s3.singular_points.size() == 1);
    CHECK(s3.singular_points[0] == std::make_pair(Rat(0), Rat(0)));
}

TEST_CASE("critical fiber certificate") {
    CriticalCert c = critical_alpha_certificate(gkz::reference_model(), 192);
    CHECK(rat_str(c.alpha_sing) == "3125/940369969152");
    CHECK(c.converged);
    CHECK(mp::Real(c.residual) < mp::Real("1e-10"));
    CHECK(mp::Real(c.proportionality) < mp::Real("1e-8"));

    hypergeom::GammaList small{{-2, 1, 1}};
    CriticalCert c2 = critical_alpha_certificate(gkz::realize_monomials(small), 128);
    // the family itself degenerates at the negative of the series radius here
    CHECK(c2.alpha_sing == Rat(-1, 4));
    CHECK(c2.converged);
    CHECK(mp::Real(c2.residual) < mp::Real("1e-10"));
}

TEST_CASE("boundary divisor restrictions of the chart") {
    QuadForm3 q = conic_chart(gkz::reference_model());
    // x0 = 0 leaves u1 x1^2 - (1/alpha) x2^2, i.e. alpha u1 x1^2 - x2^2 up to
    // the unit alpha
    CHECK(q.a[1][1] == c3({{{0, 1, 0}, Rat(1)}}));
    CHECK(q.a[1][2].is_zero());
    LaurentPoly alpha_unit = lp_monomial(kVars, {1, 0, 0}, Rat(1));
    CHECK(alpha_unit * q.a[2][2] == c3({{{0, 0, 0}, Rat(-1)}}));
    // x1 = x2 = 0 leaves u1^3 u2 + u2^3 = u2 (u1^3 + u2^2)
    LaurentPoly factor = c3({{{0, 3, 0}, Rat(1)}, {{0, 0, 2}, Rat(1)}});
    CHECK(q.a[0][0] == lp_var(kVars, 2) * factor);
}

TEST_CASE("rank stratification at sampled fibers") {
    QuadForm3 q = conic_chart(gkz::reference_model());
    DiagResult d = diagonalize(q);
    PlaneCurveModel delta = discriminant(d.diag);
    // a point on the discriminant: solve for alpha
    Rat u1(2), u2(3);
    Rat alpha = -lp_eval(delta.f, {Rat(0), u1, u2});
    REQUIRE(alpha != 0);
    CHECK(lp_eval(delta.f, {alpha, u1, u2}) == 0);
    CHECK(quad_rank_at(q, alpha, u1, u2) == 2);
    CHECK(quad_rank_at(q, alpha + 1, u1, u2) == 3);
}
