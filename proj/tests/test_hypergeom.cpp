#include "prymhg/hypergeom.hpp"

#include "prymhg/ore.hpp"

#include <doctest.h>

#include <random>

using namespace prymhg;
using namespace prymhg::hypergeom;

static const GammaList kStar{{-18, -1, 2, 3, 5, 9}};
static const GammaList kSmall{{-2, 1, 1}};
static const GammaList kCurve{{-9, 1, 3, 5}};

TEST_CASE("series coefficients") {
    CHECK(coefficient(kStar, 0) == 1);
    CHECK(coefficient(kStar, 1) == Rat(12252240));
    CHECK(coefficient(kCurve, 1) == Rat(504));  // 9!/(1! 3! 5!)
    CHECK(coefficient(kSmall, 3) == Rat(20));   // central binomial
}

TEST_CASE("coefficient recursion matches the exponent products") {
    for (const GammaList& g : {kStar, kSmall, kCurve}) {
        Rat alpha0 = singular_value(g);
        std::vector<Rat> r0, rInf;
        for (long e : g.entries) {
            long n = e > 0 ? e : -e;
            for (long k = 0; k < n; ++k) {
                if (e > 0)
                    r0.push_back(Rat(k) / Rat(n));
                else
                    rInf.push_back(Rat(k + 1) / Rat(n));
            }
        }
        for (unsigned long j = 0; j <= 30; ++j) {
            Rat lhs = coefficient(g, j + 1) * alpha0;
            Rat num = 1, den = 1;
            for (const Rat& a : rInf) num *= Rat((long)j) + a;
            for (const Rat& b : r0) den *= Rat((long)j) + 1 - b;
            CHECK(lhs * den == coefficient(g, j) * num);
        }
    }
}

TEST_CASE("singular values") {
    CHECK(rat_str(singular_value(kStar)) == "3125/940369969152");
    CHECK(singular_value(kCurve) == Rat(3125, 14348907));  // 5^5 / 3^15
    CHECK(singular_value(kSmall) == Rat(1, 4));
    GammaList bad{{1, 1}};
    CHECK_THROWS(singular_value(bad));
}

TEST_CASE("reduced exponents") {
    ExponentData d = reduced_exponents(kStar);
    CHECK(d.order == 8);
    CHECK(d.exps0 == std::vector<Rat>{Rat(0), Rat(0), Rat(1, 5), Rat(1, 3), Rat(2, 5), Rat(3, 5),
                                      Rat(2, 3), Rat(4, 5)});
    CHECK(d.expsInf == std::vector<Rat>{Rat(1, 18), Rat(1, 6), Rat(5, 18), Rat(7, 18), Rat(11, 18),
                                        Rat(13, 18), Rat(5, 6), Rat(17, 18)});
    CHECK(d.cancelled.size() == 11);

    ExponentData s = reduced_exponents(kSmall);
    CHECK(s.order == 1);
    CHECK(s.exps0 == std::vector<Rat>{Rat(0)});
    CHECK(s.expsInf == std::vector<Rat>{Rat(1, 2)});

    ExponentData c = reduced_exponents(kCurve);
    CHECK(c.order == 6);
    CHECK(c.exps0 == std::vector<Rat>{Rat(0), Rat(0), Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)});
    CHECK(c.expsInf == std::vector<Rat>{Rat(1, 9), Rat(2, 9), Rat(4, 9), Rat(5, 9), Rat(7, 9),
                                        Rat(8, 9)});
}

TEST_CASE("balance and disjointness invariants") {
    for (const GammaList& g : {kStar, kSmall, kCurve}) {
        long pos = 0, neg = 0;
        for (long e : g.entries) (e > 0 ? pos : neg) += e > 0 ? e : -e;
        CHECK(pos == neg);
        ExponentData d = reduced_exponents(g);
        CHECK((long)d.exps0.size() + (long)d.cancelled.size() == pos);
        for (const Rat& x : d.exps0)
            CHECK(std::find(d.expsInf.begin(), d.expsInf.end(), x) == d.expsInf.end());
    }
}

// independent construction of the explicit order-8 operator display
static ore::OreOp explicit_irreducible() {
    using namespace ore;
    std::vector<Rat> roots0 = {Rat(0), Rat(1, 3), Rat(2, 3)};
    for (long n = 0; n <= 4; ++n) roots0.push_back(Rat(n, 5));
    std::vector<Rat> rootsInf;
    for (long n = 0; n <= 8; ++n)
        if (n != 4) rootsInf.push_back(Rat(-(2 * n + 1), 18));
    Rat alpha0("3125/940369969152");
    return ore_from_dpoly(upoly_from_roots(roots0), lp_const(alpha_var(), alpha0)) -
           ore_from_dpoly(upoly_from_roots(rootsInf),
                          lp_monomial(alpha_var(), {1}, Rat(1)));
}

// independent construction of the explicit order-19 operator display
static ore::OreOp explicit_reducible() {
    using namespace ore;
    std::vector<Rat> roots0 = {Rat(0), Rat(1, 2)};
    for (long i = 0; i <= 2; ++i) roots0.push_back(Rat(i, 3));
    for (long i = 0; i <= 4; ++i) roots0.push_back(Rat(i, 5));
    for (long i = 0; i <= 8; ++i) roots0.push_back(Rat(i, 9));
    std::vector<Rat> rootsInf = {Rat(-1)};
    for (long i = 1; i <= 18; ++i) rootsInf.push_back(Rat(-i, 18));
    Rat alpha0("3125/940369969152");
    return ore_from_dpoly(upoly_from_roots(roots0), lp_const(alpha_var(), alpha0)) -
           ore_from_dpoly(upoly_from_roots(rootsInf),
                          lp_monomial(alpha_var(), {1}, Rat(1)));
}

TEST_CASE("operator construction matches the explicit displays") {
    CHECK(build_irreducible_operator(kStar) == explicit_irreducible());
    CHECK(build_reducible_operator(kStar) == explicit_reducible());

    // (1/4) D - alpha (D + 1/2)
    ore::OreOp h = build_irreducible_operator(kSmall);
    CHECK(h.order() == 1);
    ore::OreOp expect =
        ore::ore_from_dpoly(UniPoly({Rat(0), Rat(1)}),
                            lp_const(ore::alpha_var(), Rat(1, 4))) -
        ore::ore_from_dpoly(UniPoly({Rat(1, 2), Rat(1)}),
                            lp_monomial(ore::alpha_var(), {1}, Rat(1)));
    CHECK(h == expect);

    // (1/4) D^2 - alpha (D + 1/2)(D + 1)
    ore::OreOp ht = build_reducible_operator(kSmall);
    ore::OreOp expect2 =
        ore::ore_from_dpoly(UniPoly({Rat(0), Rat(0), Rat(1)}),
                            lp_const(ore::alpha_var(), Rat(1, 4))) -
        ore::ore_from_dpoly(upoly_from_roots({Rat(-1, 2), Rat(-1)}),
                            lp_monomial(ore::alpha_var(), {1}, Rat(1)));
    CHECK(ht == expect2);
}

TEST_CASE("operators annihilate their series") {
    for (const GammaList& g : {kStar, kSmall, kCurve}) {
        std::vector<Rat> coeffs;
        for (unsigned long j = 0; j <= 41; ++j) coeffs.push_back(coefficient(g, j));
        for (const ore::OreOp& op :
             {build_irreducible_operator(g), build_reducible_operator(g)}) {
            std::vector<Rat> img = ore::apply_to_series(op, coeffs, 40);
            for (const Rat& c : img) CHECK(c == 0);
        }
    }
}

TEST_CASE("charpoly ratio identity") {
    CHECK(bh_ratio_check(kStar));
    CHECK(bh_ratio_check(kSmall));
    CHECK(bh_ratio_check(kCurve));

    ExponentData d = reduced_exponents(kStar);
    CHECK(charpoly_from_exponents(d.exps0) ==
          cyclotomic(1) * cyclotomic(1) * cyclotomic(3) * cyclotomic(5));
    CHECK(charpoly_from_exponents(d.expsInf) == cyclotomic(6) * cyclotomic(18));
    ExponentData c = reduced_exponents(kCurve);
    CHECK(charpoly_from_exponents(c.exps0) == cyclotomic(1) * cyclotomic(1) * cyclotomic(5));
    CHECK(charpoly_from_exponents(c.expsInf) == cyclotomic(9));
    ExponentData s = reduced_exponents(kSmall);
    CHECK(charpoly_from_exponents(s.exps0) == cyclotomic(1));
    CHECK(charpoly_from_exponents(s.expsInf) == cyclotomic(2));

    // a multiset missing part of an orbit is rejected
    CHECK_THROWS(charpoly_from_exponents({Rat(1, 5)}));
}

TEST_CASE("integrality scan") {
    CHECK(integrality_scan(kStar, 200));
    CHECK(integrality_scan(kSmall, 200));
}

TEST_CASE("ratio identity on random balanced lists") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        long a = 1 + (long)(rng() % 6), b = 1 + (long)(rng() % 6), c = 1 + (long)(rng() % 4);
        GammaList g{{-(a + b + c), a, b, c}};
        CHECK(bh_ratio_check(g));
        ExponentData d = reduced_exponents(g);
        CHECK((long)d.exps0.size() == d.order);
    }
}
