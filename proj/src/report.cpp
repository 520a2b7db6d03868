#include "prymhg/report.hpp"

#include "prymhg/conic.hpp"
#include "prymhg/gkz.hpp"
#include "prymhg/hodge.hpp"
#include "prymhg/hypergeom.hpp"
#include "prymhg/lattice.hpp"
#include "prymhg/monodromy.hpp"
#include "prymhg/ore.hpp"

#include <random>
#include <sstream>

namespace prymhg::report {

using hypergeom::GammaList;

static const GammaList& star_gamma() {
    static GammaList g{{-18, -1, 2, 3, 5, 9}};
    return g;
}

static Check make(const std::string& name, const std::string& anchor, bool pass,
                  const std::string& detail) {
    return {name, anchor, pass ? "pass" : "fail", detail};
}

static std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific;
    os.precision(3);
    os << x;
    return os.str();
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::string checks_json(const std::vector<Check>& checks) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < checks.size(); ++i) {
        os << (i ? "," : "") << "{\"name\":\"" << checks[i].name << "\",\"anchor\":\""
           << checks[i].anchor << "\",\"status\":\"" << checks[i].status << "\",\"detail\":\""
           << checks[i].detail << "\"}";
    }
    os << "]";
    return os.str();
}

// 1 ------------------------------------------------------------------------
std::vector<Check> criterion_series(const VerifyOptions&) {
    std::vector<Check> out;
    const GammaList& g = star_gamma();
    Rat a1 = hypergeom::coefficient(g, 1);
    out.push_back(make("first series coefficient", "hypergeometric-series-coefficients",
                       a1 == Rat(12252240), "A_1 = " + rat_str(a1)));
    std::vector<Rat> coeffs;
    for (unsigned long j = 0; j <= 60; ++j) coeffs.push_back(hypergeom::coefficient(g, j));
    ore::OreOp H = hypergeom::build_irreducible_operator(g);
    std::vector<Rat> img = ore::apply_to_series(H, coeffs, 60);
    bool zero = true;
    for (const Rat& c : img) zero = zero && c == 0;
    out.push_back(make("operator annihilates the series through degree 59",
                       "series-annihilation", zero, zero ? "all 60 coefficients vanish" : "nonzero"));
    return out;
}

// 2 ------------------------------------------------------------------------
std::vector<Check> criterion_singular_value(const VerifyOptions&) {
    Rat a0 = hypergeom::singular_value(star_gamma());
    bool ok = a0 == parse_rat("3125/940369969152");
    return {make("singular value", "singular-value-alpha0", ok, "alpha0 = " + rat_str(a0))};
}

// 3 ------------------------------------------------------------------------
std::vector<Check> criterion_exponents(const VerifyOptions&) {
    std::vector<Check> out;
    const GammaList& g = star_gamma();
    hypergeom::ExponentData ed = hypergeom::reduced_exponents(g);
    std::vector<Rat> want0 = {Rat(0), Rat(0),      Rat(1, 3), Rat(2, 3),
                              Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)};
    std::vector<Rat> wantInf = {Rat(1, 18),  Rat(3, 18),  Rat(5, 18),  Rat(7, 18),
                                Rat(11, 18), Rat(13, 18), Rat(15, 18), Rat(17, 18)};
    std::sort(want0.begin(), want0.end());
    std::sort(wantInf.begin(), wantInf.end());
    bool ok = ed.order == 8 && ed.exps0 == want0 && ed.expsInf == wantInf;
    out.push_back(make("reduced exponent multisets and order 8", "local-exponent-reduction", ok,
                       "order " + std::to_string(ed.order)));
    long tilde_order = hypergeom::build_reducible_operator(g).order();
    out.push_back(make("uncancelled operator order 19", "reducible-operator-order",
                       tilde_order == 19, "order " + std::to_string(tilde_order)));
    bool ratio = hypergeom::bh_ratio_check(g);
    out.push_back(make("characteristic polynomial ratio identity", "monodromy-charpoly-ratio",
                       ratio, ratio ? "polynomial identity holds" : "identity fails"));
    return out;
}

// 4 ------------------------------------------------------------------------
std::vector<Check> criterion_factorization(const VerifyOptions&) {
    const GammaList& g = star_gamma();
    ore::OreOp H = hypergeom::build_irreducible_operator(g);
    ore::OreOp G = hypergeom::cancellation_cofactor(g);
    ore::OreOp Ht = hypergeom::build_reducible_operator(g);
    bool ok = ore::ore_multiply(G, H) == Ht;
    return {make("cofactor times operator equals the uncancelled operator",
                 "operator-factorization", ok,
                 ok ? "product matches coefficient-by-coefficient" : "mismatch")};
}

// 5 ------------------------------------------------------------------------
std::vector<Check> criterion_gkz(const VerifyOptions&) {
    std::vector<Check> out;
    const GammaList& g = star_gamma();
    gkz::ToricModel realized = gkz::realize_monomials(g);
    gkz::ToricModel ref = gkz::reference_model();
    auto equiv = lattice::affine_equivalent(realized.monomials, ref.monomials);
    out.push_back(make("realized monomials match the chart model up to affine equivalence",
                       "toric-model-uniqueness", equiv.has_value(),
                       equiv ? "unimodular transform found" : "no label-preserving equivalence"));

    gkz::GKZSystem sys = gkz::build_gkz(ref.monomials);
    std::vector<std::vector<long>> expected_rows = {{1, 1, 1, 1, 1, 1}, {1, 0, 0, 3, 0, 1},
                                                    {1, 0, 0, 1, 3, 0}, {1, 0, 0, 0, 0, 2},
                                                    {0, 2, 1, 0, 0, 0}};
    bool rows_ok =
        lattice::hermite_row_basis(lattice::IntMatrix::from_rows(sys.euler_ops)) ==
        lattice::hermite_row_basis(lattice::IntMatrix::from_rows(expected_rows));
    out.push_back(make("homogeneity covectors row-equivalent to the explicit system",
                       "gkz-euler-operators", rows_ok, ""));
    bool box_ok = sys.box_ops.size() == 1 &&
                  sys.box_ops[0].plus == std::vector<long>{0, 0, 2, 3, 5, 9} &&
                  sys.box_ops[0].minus == std::vector<long>{18, 1, 0, 0, 0, 0};
    out.push_back(make("single box operator from the relation lattice", "gkz-box-operator",
                       box_ok, ""));

    gkz::Restriction restr = gkz::restrict_to_line(sys, g, ref.kexp);
    ore::OreOp Ht = hypergeom::build_reducible_operator(g);
    auto ratio = ore::ore_proportional(restr.normalized, Ht);
    out.push_back(make("restricted operator equals the uncancelled operator up to a rational unit",
                       "gkz-restriction", restr.euler_certificate && ratio.has_value(),
                       ratio ? "unit factor " + rat_str(*ratio) : "not proportional"));
    return out;
}

// 6 ------------------------------------------------------------------------
std::vector<Check> criterion_coordinate_change(const VerifyOptions&) {
    gkz::ToricModel simplex = gkz::reference_simplex_model();
    gkz::ToricModel chart = gkz::reference_model();
    LaurentPoly moved = laurent_substitute(simplex.f, gkz::reference_coordinate_change());
    LaurentPoly unit = lp_monomial(moved.vars, {0, 1, 1, 1, 0}, Rat(1));  // u1 u2 u3
    bool ok = poly_identity_check(unit * moved, chart.f);
    return {make("torus coordinate change carries one model to the other",
                 "torus-coordinate-change", ok, ok ? "term-for-term match" : "mismatch")};
}

// helpers for the conic pipeline ------------------------------------------
struct ConicData {
    conic::QuadForm3 chart;
    conic::DiagResult diag;
    conic::PlaneCurveModel delta, cover;
    conic::WeightedCurve closureN, closureNt;
};

static ConicData conic_pipeline() {
    ConicData d;
    d.chart = conic::conic_chart(gkz::reference_model());
    d.diag = conic::diagonalize(d.chart);
    d.delta = conic::discriminant(d.diag.diag);
    d.cover = conic::double_cover(d.diag.diag, d.delta);
    d.closureN = conic::projective_closure(d.delta, {1, 1, 1}, {"u0", "u1", "u2"});
    d.closureNt = conic::projective_closure(d.cover, {1, 1, 3}, {"x0", "x1", "y"});
    return d;
}

static LaurentPoly curve3(std::initializer_list<std::pair<std::vector<long>, Rat>> terms) {
    LaurentPoly f(std::vector<std::string>{"alpha", "u1", "u2"});
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

// 7 ------------------------------------------------------------------------
std::vector<Check> criterion_conic(const VerifyOptions&) {
    std::vector<Check> out;
    ConicData d = conic_pipeline();
    // diagonal entries: (u1^3 u2 + u2^3 + alpha/4 - u1 u2^2/4, u1, -1/alpha)
    LaurentPoly d00 = curve3({{{0, 3, 1}, Rat(1)},
                              {{0, 0, 3}, Rat(1)},
                              {{1, 0, 0}, Rat(1, 4)},
                              {{0, 1, 2}, Rat(-1, 4)}});
    LaurentPoly d11 = curve3({{{0, 1, 0}, Rat(1)}});
    LaurentPoly d22 = curve3({{{-1, 0, 0}, Rat(-1)}});
    bool diag_ok = d.diag.diag.a[0][0] == d00 && d.diag.diag.a[1][1] == d11 &&
                   d.diag.diag.a[2][2] == d22 && d.diag.diag.a[0][1].is_zero() &&
                   d.diag.diag.a[0][2].is_zero() && d.diag.diag.a[1][2].is_zero();
    out.push_back(make("diagonalized chart matches the explicit diagonal form",
                       "conic-diagonal-form", diag_ok, ""));

    LaurentPoly delta_expect = curve3({{{0, 3, 1}, Rat(4)},
                                       {{0, 0, 3}, Rat(4)},
                                       {{1, 0, 0}, Rat(1)},
                                       {{0, 1, 2}, Rat(-1)}});
    out.push_back(make("discriminant curve", "discriminant-quartic-model",
                       d.delta.f == delta_expect, lp_str(d.delta.f)));

    LaurentPoly cover_expect = curve3({{{3, 6, 1}, Rat(4)},
                                       {{0, 0, 3}, Rat(4)},
                                       {{1, 0, 0}, Rat(1)},
                                       {{1, 2, 2}, Rat(-1)}});
    out.push_back(make("ramification double cover", "double-cover-model",
                       d.cover.f == cover_expect, lp_str(d.cover.f)));

    LaurentPoly pulled = laurent_substitute(
        d.delta.f, {lp_var(d.delta.f.vars, 0),
                    lp_monomial(d.delta.f.vars, {1, 2, 0}, Rat(1)), lp_var(d.delta.f.vars, 2)});
    out.push_back(make("cover equation is the discriminant pulled through the covering map",
                       "covering-map-compatibility", poly_identity_check(pulled, d.cover.f), ""));

    LaurentPoly closureN_expect(std::vector<std::string>{"alpha", "u0", "u1", "u2"});
    closureN_expect.add_term({0, 0, 3, 1}, Rat(4));
    closureN_expect.add_term({0, 1, 0, 3}, Rat(4));
    closureN_expect.add_term({1, 4, 0, 0}, Rat(1));
    closureN_expect.add_term({0, 1, 1, 2}, Rat(-1));
    bool n_ok = d.closureN.F == closureN_expect && d.closureN.degree == 4;
    out.push_back(make("plane closure is the quartic", "plane-quartic-closure", n_ok,
                       lp_str(d.closureN.F)));

    LaurentPoly closureNt_expect(std::vector<std::string>{"alpha", "x0", "x1", "y"});
    closureNt_expect.add_term({0, 0, 0, 3}, Rat(4));        // 4 y^3
    closureNt_expect.add_term({1, 1, 2, 2}, Rat(-1));       // -alpha x0 x1^2 y^2
    closureNt_expect.add_term({3, 0, 6, 1}, Rat(4));        // 4 alpha^3 x1^6 y
    closureNt_expect.add_term({1, 9, 0, 0}, Rat(1));        // alpha x0^9
    bool nt_ok = d.closureNt.F == closureNt_expect && d.closureNt.degree == 9;
    out.push_back(make("weighted closure of the cover has degree 9",
                       "weighted-genus7-curve", nt_ok, lp_str(d.closureNt.F)));
    return out;
}

// 8 ------------------------------------------------------------------------
std::vector<Check> criterion_genera(const VerifyOptions&) {
    std::vector<Check> out;
    ConicData d = conic_pipeline();
    long g_base = conic::genus_from_polytope(d.delta);
    long g_cover = conic::genus_from_polytope(d.cover);
    out.push_back(make("interior counts give genus 3 and 7", "newton-polygon-genera",
                       g_base == 3 && g_cover == 7,
                       "g = " + std::to_string(g_base) + ", " + std::to_string(g_cover)));
    conic::FixedPointData fixed = conic::involution_fixed_points(d.closureNt);
    out.push_back(make("involution has four fixed points", "involution-fixed-points",
                       fixed.count == 4, std::to_string(fixed.count) + " fixed points"));
    bool rank8 = 2 * g_cover - 2 * g_base == 8;
    out.push_back(make("anti-invariant rank 8", "anti-invariant-rank", rank8, ""));
    bool rh = 2 * g_cover - 2 == 2 * (2 * g_base - 2) + fixed.count;
    out.push_back(make("covering genus balance 12 = 8 + 4", "covering-genus-balance", rh, ""));
    return out;
}

// 9 ------------------------------------------------------------------------
std::vector<Check> criterion_rank_stratification(const VerifyOptions& opt) {
    std::vector<Check> out;
    ConicData d = conic_pipeline();
    std::mt19937 rng(opt.seed);
    auto small_rat = [&](long span) -> Rat {
        long num = (long)(rng() % (unsigned long)(2 * span)) - span;
        long den = (long)(rng() % 3) + 1;
        if (num == 0) num = 1;
        return Rat(num) / Rat(den);
    };
    long on_ok = 0, off_ok = 0, on_tries = 0, off_tries = 0;
    while (on_ok < 10 && on_tries < 400) {
        ++on_tries;
        Rat u1 = small_rat(6), u2 = small_rat(6);
        // solve the discriminant equation for alpha: its alpha-coefficient is 1
        Rat rest = lp_eval(d.delta.f, {Rat(0), u1, u2});
        Rat alpha = -rest;
        if (alpha == 0) continue;
        if (conic::quad_rank_at(d.chart, alpha, u1, u2) == 2) ++on_ok;
    }
    out.push_back(make("rank 2 at ten sampled points on the discriminant",
                       "fiber-rank-on-discriminant", on_ok == 10,
                       std::to_string(on_ok) + "/10 (seed " + std::to_string(opt.seed) + ")"));
    while (off_ok < 10 && off_tries < 400) {
        ++off_tries;
        Rat u1 = small_rat(6), u2 = small_rat(6), alpha = small_rat(6);
        if (alpha == 0 || lp_eval(d.delta.f, {alpha, u1, u2}) == 0) continue;
        if (conic::quad_rank_at(d.chart, alpha, u1, u2) == 3) ++off_ok;
    }
    out.push_back(make("rank 3 at ten sampled points off the discriminant",
                       "fiber-rank-off-discriminant", off_ok == 10,
                       std::to_string(off_ok) + "/10"));
    conic::SmoothnessCert cert = conic::smoothness_certificate(d.delta, Rat(1));
    out.push_back(make("discriminant is smooth on the torus at the sample value",
                       "discriminant-smoothness", cert.resolved && cert.torus_smooth,
                       "resultant witnesses recorded"));
    return out;
}

// 10 -----------------------------------------------------------------------
std::vector<Check> criterion_dimensions(const VerifyOptions&) {
    std::vector<Check> out;
    hodge::DimensionReport r = hodge::dimension_identities(star_gamma());
    out.push_back(make("normalized volume 19 equals the uncancelled operator order",
                       "volume-rank-identity", r.vol == 19 && r.vol_equals_reducible_order,
                       "vol = " + r.vol.str()));
    out.push_back(make("primitive dimension 18 equals the table total",
                       "primitive-dimension-identity",
                       r.dim_primitive == 18 && r.primitive_equals_table_total, ""));
    out.push_back(make("weight-3 slice 8 equals the reduced operator order",
                       "weight3-rank-identity",
                       r.weight3_total == 8 && r.weight3_equals_irreducible_order, ""));
    bool genus0 = hodge::geometric_genus_check(star_gamma());
    out.push_back(make("no interior lattice points in the 4-polytope",
                       "geometric-genus-zero", genus0, ""));
    out.push_back(make("dimension table is symmetric", "hodge-table-symmetry",
                       hodge::reference_table().symmetric(), ""));
    return out;
}

// 11 -----------------------------------------------------------------------
std::vector<Check> criterion_monodromy(const VerifyOptions& opt) {
    std::vector<Check> out;
    if (!opt.with_monodromy)
        return {{"numerical monodromy", "numerical-monodromy", "skipped", "disabled"}};
    monodromy::ContinuationConfig cfg;
    cfg.precision_bits = opt.bits;
    cfg.tolerance = opt.tolerance;
    monodromy::MonodromyReport rep = monodromy::monodromy_run(star_gamma(), cfg);
    out.push_back(make("characteristic polynomial at 0", "monodromy-charpoly-0",
                       rep.charpoly_residual_0 < 1e-8,
                       "residual " + sci(rep.charpoly_residual_0)));
    out.push_back(make("characteristic polynomial at infinity", "monodromy-charpoly-inf",
                       rep.charpoly_residual_inf < 1e-8,
                       "residual " + sci(rep.charpoly_residual_inf)));
    out.push_back(make("pseudo-reflection at the singular value", "monodromy-reflection",
                       rep.reflection_rank == 1,
                       "rank " + std::to_string(rep.reflection_rank)));
    return out;
}

// 12 -----------------------------------------------------------------------
std::vector<Check> criterion_finite_fields(const VerifyOptions& opt) {
    std::vector<Check> out;
    if (!opt.with_counts)
        return {{"finite field counts", "finite-field-counts", "skipped", "disabled"}};
    gkz::ToricModel chart = gkz::reference_model();
    gkz::ToricModel simplex = gkz::reference_simplex_model();
    bool equal = true;
    std::string detail;
    for (long p : {7L, 11L, 13L, 31L}) {
        auto c1 = gkz::count_torus_points_all_alpha(chart.f, p);
        auto c2 = gkz::count_torus_points_all_alpha(simplex.f, p);
        for (long a = 1; a < p; ++a)
            if (c1[(size_t)a] != c2[(size_t)a]) {
                equal = false;
                detail = "mismatch at p=" + std::to_string(p) + ", alpha=" + std::to_string(a);
            }
    }
    out.push_back(make("both torus models count equally at every admissible value",
                       "model-isomorphism-counts", equal, detail));

    // the cover's count equals the quadratic-character fiber sum over the base
    ConicData d = conic_pipeline();
    auto modpow = [](long b, long e, long p) {
        long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    bool fiber_ok = true;
    for (long p : {7L, 11L, 13L, 31L}) {
        for (long a = 1; a < p; ++a) {
            auto base_pts = gkz::torus_zeros_2d(d.delta.f, p, a);
            auto cover_pts = gkz::torus_zeros_2d(d.cover.f, p, a);
            long expect = 0;
            for (const auto& [u1, u2] : base_pts) {
                // lifts solve alpha t^2 = u1; two when u1/alpha is a square
                long w = u1 * modpow(a, p - 2, p) % p;
                expect += modpow(w, (p - 1) / 2, p) == 1 ? 2 : 0;
            }
            if ((long)cover_pts.size() != expect) fiber_ok = false;
        }
    }
    out.push_back(make("cover count equals the quadratic-character fiber sum",
                       "cover-fiber-counts", fiber_ok, ""));
    return out;
}

// 13 -----------------------------------------------------------------------
std::vector<Check> criterion_critical_fiber(const VerifyOptions& opt) {
    conic::CriticalCert cert =
        conic::critical_alpha_certificate(gkz::reference_model(), std::max(opt.bits, 256u));
    bool small_resid = false;
    try {
        small_resid = cert.converged && mp::Real(cert.residual) < mp::Real("1e-10");
    } catch (...) {
    }
    return {make("critical-point witness at the singular value", "critical-fiber-witness",
                 small_resid, "residual " + cert.residual)};
}

std::vector<Check> verify_all(const VerifyOptions& opt) {
    std::vector<Check> all;
    auto absorb = [&](std::vector<Check> v) {
        for (auto& c : v) all.push_back(std::move(c));
    };
    absorb(criterion_series(opt));
    absorb(criterion_singular_value(opt));
    absorb(criterion_exponents(opt));
    absorb(criterion_factorization(opt));
    absorb(criterion_gkz(opt));
    absorb(criterion_coordinate_change(opt));
    absorb(criterion_conic(opt));
    absorb(criterion_genera(opt));
    absorb(criterion_rank_stratification(opt));
    absorb(criterion_dimensions(opt));
    absorb(criterion_monodromy(opt));
    absorb(criterion_finite_fields(opt));
    absorb(criterion_critical_fiber(opt));
    return all;
}

}  // namespace prymhg::report
