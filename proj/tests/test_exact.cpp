#include "prymhg/exact.hpp"

#include <doctest.h>

#include <random>

using namespace prymhg;

static Rat rand_rat(std::mt19937& rng) {
    long num = (long)(rng() % 41) - 20;
    long den = (long)(rng() % 12) + 1;
    return Rat(num) / Rat(den);
}

TEST_CASE("rational arithmetic laws on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
    CHECK(rat_str(Rat(6) / Rat(-4)) == "-3/2");
    CHECK(rat_str(parse_rat("14/7")) == "2");
    CHECK(parse_rat("-3/9") == Rat(-1, 3));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(upoly_str(cyclotomic(1)) == "t - 1");
    CHECK(cyclotomic(6) == UniPoly({Rat(1), Rat(-1), Rat(1)}));
    // divide t^18-1 by the proper lower factors by hand
    UniPoly t18;
    t18.c.assign(19, Rat(0));
    t18.c[0] = -1;
    t18.c[18] = 1;
    UniPoly q = t18;
    for (unsigned long d : {1, 2, 3, 6, 9})
        q = upoly_divexact(q, cyclotomic(d));
    CHECK(cyclotomic(18) == q);
    CHECK(q == UniPoly({Rat(1), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("product of cyclotomic factors over all divisors") {
    for (unsigned long n = 1; n <= 60; ++n) {
        UniPoly prod = UniPoly::constant(1);
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        UniPoly tn;
        tn.c.assign(n + 1, Rat(0));
        tn.c[0] = -1;
        tn.c[n] = 1;
        CHECK(prod == tn);
    }
}

TEST_CASE("monomial substitution") {
    std::vector<std::string> u2 = {"u1", "u2"};
    LaurentPoly f = lp_var(u2, 0) + lp_var(u2, 1);
    std::vector<LaurentPoly> swap_images = {lp_var(u2, 1), lp_var(u2, 0)};
    CHECK(laurent_substitute(f, swap_images) == f);

    std::vector<std::string> u4 = {"u1", "u2", "u3", "u4"};
    LaurentPoly g = lp_var(u4, 0);
    std::vector<LaurentPoly> images = {
        lp_monomial(u4, {-1, -1, -1, 1}, Rat(1)),  // u4/(u1 u2 u3)
        lp_var(u4, 1), lp_var(u4, 2), lp_var(u4, 3)};
    CHECK(laurent_substitute(g, images) == lp_monomial(u4, {-1, -1, -1, 1}, Rat(1)));

    // a non-monomial image is rejected
    std::vector<LaurentPoly> bad = {lp_var(u2, 0) + lp_var(u2, 1), lp_var(u2, 1)};
    CHECK_THROWS(laurent_substitute(f, bad));
}

TEST_CASE("substitution commutes with multiplication") {
    std::vector<std::string> u3 = {"u1", "u2", "u3"};
    std::mt19937 rng(11);
    auto rand_poly = [&] {
        LaurentPoly f(u3);
        for (int t = 0; t < 4; ++t) {
            std::vector<long> e = {(long)(rng() % 5) - 2, (long)(rng() % 5) - 2,
                                   (long)(rng() % 5) - 2};
            f.add_term(e, rand_rat(rng));
        }
        return f;
    };
    std::vector<LaurentPoly> images = {lp_monomial(u3, {0, 1, -1}, Rat(-1)),
                                       lp_monomial(u3, {2, 0, 1}, Rat(1)),
                                       lp_monomial(u3, {-1, 1, 0}, Rat(1))};
    for (int i = 0; i < 30; ++i) {
        LaurentPoly f = rand_poly(), g = rand_poly();
        CHECK(laurent_substitute(f * g, images) ==
              laurent_substitute(f, images) * laurent_substitute(g, images));
    }
}

TEST_CASE("identity checks") {
    UniPoly t = UniPoly::var();
    CHECK(poly_identity_check((t - UniPoly::constant(1)) * (t + UniPoly::constant(1)),
                              t * t - UniPoly::constant(1)));
    // phi_1^2 phi_3 phi_5 (t^18-1)(t-1) = phi_6 phi_18 (t^2-1)(t^3-1)(t^5-1)(t^9-1)
    auto tn = [](unsigned long n) {
        UniPoly p;
        p.c.assign(n + 1, Rat(0));
        p.c[0] = -1;
        p.c[n] = 1;
        return p;
    };
    UniPoly lhs = cyclotomic(1) * cyclotomic(1) * cyclotomic(3) * cyclotomic(5) * tn(18) * tn(1);
    UniPoly rhs = cyclotomic(6) * cyclotomic(18) * tn(2) * tn(3) * tn(5) * tn(9);
    CHECK(poly_identity_check(lhs, rhs));

    std::vector<std::string> u2 = {"u1", "u2"};
    CHECK_FALSE(poly_identity_check(lp_var(u2, 0), lp_var(u2, 1)));
    LaurentPoly other(std::vector<std::string>{"u1"});
    CHECK_THROWS(poly_identity_check(lp_var(u2, 0), other));
}

TEST_CASE("serialization") {
    std::vector<std::string> u2 = {"u1", "u2"};
    LaurentPoly f = lp_monomial(u2, {-1, 2}, Rat(3, 2)) + lp_const(u2, Rat(-1));
    CHECK(lp_json(f) == "[{\"c\":\"3/2\",\"e\":[-1,2]},{\"c\":\"-1\",\"e\":[0,0]}]");
}
