#include "prymhg/ore.hpp"

#include "prymhg/hypergeom.hpp"

#include <doctest.h>

#include <random>

using namespace prymhg;
using namespace prymhg::ore;

TEST_CASE("commutation rule") {
    // D o alpha = alpha (D + 1)
    OreOp lhs = ore_multiply(ore_d(), ore_alpha());
    OreOp expect;
    expect.add(1, lp_monomial(alpha_var(), {1}, Rat(1)));
    expect.add(0, lp_monomial(alpha_var(), {1}, Rat(1)));
    CHECK(lhs == expect);

    OreOp a = ore_multiply(ore_alpha(2), ore_d(3));
    CHECK(ore_multiply(a, ore_const(Rat(1))) == a);
}

TEST_CASE("factorization through the cancelled multiset") {
    for (const char* gstr : {"-18,-1,2,3,5,9", "-2,1,1", "-9,1,3,5"}) {
        hypergeom::GammaList g = hypergeom::parse_gamma(gstr);
        OreOp H = hypergeom::build_irreducible_operator(g);
        OreOp G = hypergeom::cancellation_cofactor(g);
        OreOp Ht = hypergeom::build_reducible_operator(g);
        CHECK(ore_multiply(G, H) == Ht);
    }
}

static OreOp random_op(std::mt19937& rng) {
    OreOp a;
    for (int t = 0; t < 3; ++t) {
        long pw = (long)(rng() % 3);
        long ae = (long)(rng() % 5) - 2;
        long c = (long)(rng() % 9) - 4;
        if (c == 0) c = 1;
        a.add(pw, lp_monomial(alpha_var(), {ae}, Rat(c)));
    }
    return a;
}

TEST_CASE("associativity on random operators") {
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        OreOp a = random_op(rng), b = random_op(rng), c = random_op(rng);
        CHECK(ore_multiply(ore_multiply(a, b), c) == ore_multiply(a, ore_multiply(b, c)));
    }
}

TEST_CASE("application to series") {
    std::vector<Rat> s = {Rat(1), Rat(1)};
    CHECK(apply_to_series(ore_d(), s, 2) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK_THROWS(apply_to_series(ore_d(), s, 3));

    hypergeom::GammaList g = hypergeom::parse_gamma("-18,-1,2,3,5,9");
    std::vector<Rat> coeffs;
    for (unsigned long j = 0; j <= 60; ++j) coeffs.push_back(hypergeom::coefficient(g, j));
    for (const OreOp& op :
         {hypergeom::build_irreducible_operator(g), hypergeom::build_reducible_operator(g)}) {
        std::vector<Rat> img = apply_to_series(op, coeffs, 60);
        for (const Rat& c : img) CHECK(c == 0);
    }
}

TEST_CASE("composition is compatible with application") {
    std::mt19937 rng(5);
    std::vector<Rat> s;
    for (int j = 0; j < 24; ++j) s.push_back(Rat((long)(rng() % 13) - 6));
    auto nonneg_op = [&] {  // nonnegative shifts keep the truncations compatible
        OreOp a;
        for (int t = 0; t < 3; ++t) {
            long c = (long)(rng() % 9) - 4;
            if (c == 0) c = 1;
            a.add((long)(rng() % 3), lp_monomial(alpha_var(), {(long)(rng() % 3)}, Rat(c)));
        }
        return a;
    };
    for (int i = 0; i < 20; ++i) {
        OreOp a = nonneg_op(), b = nonneg_op();
        std::vector<Rat> via_b = apply_to_series(b, s, 16);
        std::vector<Rat> lhs = apply_to_series(ore_multiply(a, b), s, 8);
        std::vector<Rat> rhs = apply_to_series(a, via_b, 8);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derivative form") {
    DerivativeForm d1 = to_derivative_form(ore_d());
    CHECK(d1.p.size() == 2);
    CHECK(d1.p[0].is_zero());
    CHECK(d1.p[1] == UniPoly({Rat(0), Rat(1)}));  // alpha

    DerivativeForm d2 = to_derivative_form(ore_d(2));
    CHECK(d2.p[1] == UniPoly({Rat(0), Rat(1)}));                  // alpha
    CHECK(d2.p[2] == UniPoly({Rat(0), Rat(0), Rat(1)}));          // alpha^2

    hypergeom::GammaList g = hypergeom::parse_gamma("-18,-1,2,3,5,9");
    DerivativeForm dH = to_derivative_form(hypergeom::build_irreducible_operator(g));
    CHECK(dH.order() == 8);
    // leading coefficient is (alpha0 - alpha) alpha^8: vanishes exactly at 0 and alpha0
    UniPoly lead = dH.p[8];
    Rat alpha0 = hypergeom::singular_value(g);
    CHECK(upoly_eval(lead, Rat(0)) == 0);
    CHECK(upoly_eval(lead, alpha0) == 0);
    UniPoly expect;
    expect.c.assign(10, Rat(0));
    expect.c[8] = alpha0;
    expect.c[9] = -1;
    CHECK(lead == expect);
}

TEST_CASE("proportionality detection") {
    std::mt19937 rng(9);
    OreOp a = random_op(rng);
    auto r = ore_proportional(Rat(-7, 3) * a, a);
    REQUIRE(r.has_value());
    CHECK(*r == Rat(-7, 3));
    CHECK_FALSE(ore_proportional(a, ore_multiply(a, ore_d())).has_value());
}

TEST_CASE("stirling numbers") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(8, 3) == 966);
}
