#include "prymhg/monodromy.hpp"

#include "prymhg/hypergeom.hpp"

#include <doctest.h>

using namespace prymhg;
using namespace prymhg::monodromy;

TEST_CASE("singular values of a complex rank-one perturbation") {
    mp::set_precision_bits(128);
    long n = 5;
    // A = v w^H with nonreal entries; exactly one nonzero singular value
    std::vector<mp::Cx> v, w;
    for (long i = 0; i < n; ++i) {
        v.push_back({mp::Real(i + 1) / 3, mp::Real(2 * i - 3) / 5});
        w.push_back({mp::Real(7 - i) / 4, mp::Real(i) / 2});
    }
    mp::CMat A(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) A.at(i, j) = v[(size_t)i] * mp::conj(w[(size_t)j]);
    auto sv = mp::singular_values(A);
    mp::Real nv = 0, nw = 0;
    for (long i = 0; i < n; ++i) {
        nv += mp::norm2(v[(size_t)i]);
        nw += mp::norm2(w[(size_t)i]);
    }
    CHECK(mp::abs(mp::Cx(sv[0] - sqrt(nv * nw))) < mp::Real("1e-30"));
    for (size_t k = 1; k < sv.size(); ++k) CHECK(sv[k] < mp::Real("1e-30"));
}

TEST_CASE("taylor transport closed forms") {
    mp::set_precision_bits(128);
    // D annihilates constants: the 1-jet rides along unchanged
    {
        NumericOde ode = ode_from_operator(ore::ore_d(), Rat(1));
        mp::CMat j = mp::CMat::identity(1);
        mp::Cx center{mp::Real(1) / 2, mp::Real(0)};
        mp::Cx h{mp::Real(1) / 10, mp::Real(1) / 10};
        mp::CMat out = taylor_step(ode, center, h, j, mp::Real("1e-35"), Rat(1, 2));
        CHECK(mp::abs(out.at(0, 0) - mp::Cx(mp::Real(1))) < mp::Real("1e-30"));
    }
    // D - c has solution alpha^c: transport matches the power of the ratio
    {
        Rat c(3, 7);
        ore::OreOp op = ore::ore_d() - ore::ore_from_dpoly(UniPoly::constant(c));
        NumericOde ode = ode_from_operator(op, Rat(1));
        mp::CMat j = mp::CMat::identity(1);
        mp::Cx center{mp::Real(1) / 2, mp::Real(0)};
        mp::Cx h{mp::Real(1) / 8, mp::Real(1) / 16};
        mp::CMat out = taylor_step(ode, center, h, j, mp::Real("1e-35"), Rat(1, 2));
        // ((center+h)/center)^c via exp/log
        mp::Cx ratio = (center + h) / center;
        mp::Real lr = log(mp::abs(ratio));
        mp::Real th = atan2(ratio.im, ratio.re);
        mp::Real cr = mp::real_from_rat(c);
        mp::Real mag = exp(cr * lr);
        mp::Cx expect{mag * cos(cr * th), mag * sin(cr * th)};
        CHECK(mp::abs(out.at(0, 0) - expect) < mp::Real("1e-30"));
    }
    // clearance violations are rejected
    {
        NumericOde ode = ode_from_operator(ore::ore_d(), Rat(1));
        mp::CMat j = mp::CMat::identity(1);
        CHECK_THROWS(taylor_step(ode, mp::Cx{mp::Real(1) / 2, mp::Real(0)},
                                 mp::Cx{mp::Real(2), mp::Real(0)}, j, mp::Real("1e-30"),
                                 Rat(1, 2)));
    }
}

TEST_CASE("order-8 reversibility") {
    hypergeom::GammaList g{{-18, -1, 2, 3, 5, 9}};
    mp::set_precision_bits(128);
    NumericOde ode =
        ode_from_operator(hypergeom::build_irreducible_operator(g), hypergeom::singular_value(g));
    mp::CMat j = mp::CMat::identity(8);
    mp::Cx center{mp::Real(1) / 2, mp::Real(0)};
    mp::Cx h{mp::Real(1) / 16, mp::Real(1) / 32};
    mp::Real tol("1e-30");
    mp::CMat there = taylor_step(ode, center, h, j, tol, Rat(1, 2));
    mp::CMat back = taylor_step(ode, center + h, mp::Cx() - h, there, tol, Rat(1, 2));
    // the jet matrix of an order-8 system eats a few digits of conditioning
    CHECK(mp::cmat_max_norm(back - j) < mp::Real("1e-20"));
}

TEST_CASE("order-one control") {
    hypergeom::GammaList g{{-2, 1, 1}};
    ContinuationConfig cfg;
    cfg.precision_bits = 96;
    MonodromyReport r = monodromy_run(g, cfg);
    CHECK(r.order == 1);
    CHECK(r.charpoly_residual_0 < 1e-8);
    CHECK(r.charpoly_residual_inf < 1e-8);
    CHECK(r.reflection_rank == 1);
    CHECK(r.product_residual >= 0);
    CHECK(r.product_residual < 1e-8);
    // M0 = (1), Ma0 = (-1)
    CHECK(mp::Real(r.M0[0][0].first) > mp::Real("0.99"));
    CHECK(mp::Real(r.Ma0[0][0].first) < mp::Real("-0.99"));
    CertifyResult cert = certify(r, cfg);
    CHECK(cert.all_pass);
}

TEST_CASE("precision starvation is reported, not hidden") {
    hypergeom::GammaList g{{-2, 1, 1}};
    ContinuationConfig cfg;
    cfg.precision_bits = 64;
    cfg.tolerance = Rat(1) / rat_pow(Rat(10), 30);
    MonodromyReport r = monodromy_run(g, cfg);
    CertifyResult cert = certify(r, cfg);
    CHECK_FALSE(cert.all_pass);
}

TEST_CASE("main run at reduced precision") {
    hypergeom::GammaList g{{-18, -1, 2, 3, 5, 9}};
    ContinuationConfig cfg;
    cfg.precision_bits = 128;
    cfg.with_product_loop = false;  // the acceptance suite runs the full loop
    MonodromyReport r = monodromy_run(g, cfg);
    CHECK(r.order == 8);
    CHECK(r.charpoly_residual_0 < 1e-8);
    CHECK(r.charpoly_residual_inf < 1e-8);
    CHECK(r.det_residual_0 < 1e-8);
    CHECK(r.det_residual_a0 < 1e-8);
    CHECK(r.reflection_rank == 1);

    // moving the base point conjugates the matrices; the characteristic
    // polynomials still match the same exact predictions
    ContinuationConfig moved = cfg;
    moved.base_point = Rat(2, 5);
    MonodromyReport r2 = monodromy_run(g, moved);
    CHECK(r2.charpoly_residual_0 < 1e-8);
    CHECK(r2.charpoly_residual_inf < 1e-8);
    CHECK(r2.reflection_rank == 1);
}
