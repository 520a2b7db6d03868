#include "prymhg/conic.hpp"
#include "prymhg/gkz.hpp"
#include "prymhg/hodge.hpp"
#include "prymhg/hypergeom.hpp"
#include "prymhg/lattice.hpp"
#include "prymhg/monodromy.hpp"
#include "prymhg/ore.hpp"
#include "prymhg/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using json = nlohmann::json;
using namespace prymhg;

namespace {

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

json check_list(const std::vector<report::Check>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", c.status},
                     {"detail", c.detail}});
    return a;
}

int emit(const json& rep, bool ok) {
    std::cout << rep.dump(2) << "\n";
    int fails = 0;
    if (rep.contains("checks"))
        for (const auto& c : rep["checks"])
            if (c["status"] == "fail") ++fails;
    std::cerr << rep.value("command", "") << ": "
              << (ok ? "all checks passed" : std::to_string(fails) + " check(s) failed") << "\n";
    return ok ? 0 : 1;
}

json gamma_report(const hypergeom::GammaList& g) {
    hypergeom::ExponentData ed = hypergeom::reduced_exponents(g);
    json rep;
    rep["command"] = "gamma";
    rep["inputs"] = {{"gamma", hypergeom::gamma_str(g)}};
    rep["results"] = {{"alpha0", rat_str(ed.alpha0)},
                      {"order", ed.order},
                      {"exps0", rats_json(ed.exps0)},
                      {"expsInf", rats_json(ed.expsInf)},
                      {"cancelled", rats_json(ed.cancelled)},
                      {"A1", rat_str(hypergeom::coefficient(g, 1))}};
    std::vector<report::Check> checks;
    bool ratio = hypergeom::bh_ratio_check(g);
    checks.push_back({"charpoly ratio identity", "monodromy-charpoly-ratio",
                      ratio ? "pass" : "fail", ""});
    bool integral = hypergeom::integrality_scan(g, 200);
    checks.push_back({"series integrality through degree 200", "series-integrality",
                      integral ? "pass" : "fail", ""});
    rep["checks"] = check_list(checks);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical verification toolkit for a hypergeometric pencil "
                 "and its conic-bundle geometry"};
    app.require_subcommand(1);
    
    std::string gamma_csv = "-18,-1,2,3,5,9";
    unsigned bits = 192;
    std::string tol = "1/100000000";
    unsigned seed = 20240817;
    long budget = 10000000L;
    bool json_out = true;
    app.add_flag("--json", json_out, "machine-readable report on stdout (always on)");
    app.add_option("--bits", bits, "working precision in bits")->capture_default_str();
    app.add_option("--tol", tol, "numerical tolerance (rational)")->capture_default_str();
    app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--budget", budget, "lattice enumeration budget")->capture_default_str();

    auto* cmd_gamma = app.add_subcommand("gamma", "gamma-list calculus report");
    cmd_gamma->fallthrough();
    cmd_gamma->add_option("list", gamma_csv, "comma-separated balanced integer list");

    auto* cmd_op = app.add_subcommand("operator", "differential operator construction");
    cmd_op->fallthrough();
    cmd_op->add_option("--gamma", gamma_csv, "gamma list");
    bool reducible = false;
    cmd_op->add_flag("--reducible", reducible, "emit the uncancelled operator");

    auto* cmd_gkz = app.add_subcommand("gkz", "toric model and its differential system");
    cmd_gkz->fallthrough();
    std::string gkz_action = "build";
    cmd_gkz->add_option("action", gkz_action, "build | restrict | count")
        ->check(CLI::IsMember({"build", "restrict", "count"}));
    cmd_gkz->add_option("--gamma", gamma_csv, "gamma list");
    std::string model_name = "paper";
    long p_prime = 11, alpha_res = 1;
    cmd_gkz->add_option("--model", model_name, "chart-style or simplex-style six-monomial model")
        ->check(CLI::IsMember({"paper", "bcm"}));
    cmd_gkz->add_option("--p", p_prime, "prime modulus");
    cmd_gkz->add_option("--alpha", alpha_res, "residue of the parameter");

    auto* cmd_conic = app.add_subcommand("conic", "conic bundle analysis");
    cmd_conic->fallthrough();
    std::string conic_action = "analyze";
    cmd_conic->add_option("action", conic_action)->check(CLI::IsMember({"analyze"}));
    std::string alpha_str = "1/1";
    cmd_conic->add_option("--alpha", alpha_str, "sample value of the parameter");

    auto* cmd_poly = app.add_subcommand("polytope", "Newton polytope invariants");
    cmd_poly->fallthrough();
    cmd_poly->add_option("--gamma", gamma_csv, "gamma list");

    auto* cmd_hodge = app.add_subcommand("hodge", "dimension and weight bookkeeping");
    cmd_hodge->fallthrough();
    std::string hodge_action = "report";
    cmd_hodge->add_option("action", hodge_action)->check(CLI::IsMember({"report"}));

    auto* cmd_mono = app.add_subcommand("monodromy", "numerical analytic continuation");
    cmd_mono->fallthrough();
    std::string mono_action = "run";
    cmd_mono->add_option("action", mono_action)->check(CLI::IsMember({"run"}));
    cmd_mono->add_option("--gamma", gamma_csv, "gamma list");

    auto* cmd_verify = app.add_subcommand("verify-all", "run the full acceptance ledger");
    cmd_verify->fallthrough();
    bool no_mono = false, no_counts = false;
    cmd_verify->add_flag("--skip-monodromy", no_mono, "skip the continuation criteria");
    cmd_verify->add_flag("--skip-counts", no_counts, "skip the finite-field criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gamma->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            json rep = gamma_report(g);
            bool ok = true;
            for (const auto& c : rep["checks"]) ok = ok && c["status"] != "fail";
            return emit(rep, ok);
        }
        if (cmd_op->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            ore::OreOp op = reducible ? hypergeom::build_reducible_operator(g)
                                      : hypergeom::build_irreducible_operator(g);
            json rep;
            rep["command"] = "operator";
            rep["inputs"] = {{"gamma", gamma_csv}, {"reducible", reducible}};
            rep["results"] = {{"order", op.order()},
                              {"operator", json::parse(ore::ore_json(op))},
                              {"display", ore::ore_str(op)}};
            // factorization certificate comes along for free
            bool fact = ore::ore_multiply(hypergeom::cancellation_cofactor(g),
                                          hypergeom::build_irreducible_operator(g)) ==
                        hypergeom::build_reducible_operator(g);
            rep["checks"] = check_list({{"cofactor factorization", "operator-factorization",
                                         fact ? "pass" : "fail", ""}});
            return emit(rep, fact);
        }
        if (cmd_gkz->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            json rep;
            rep["command"] = "gkz " + gkz_action;
            rep["inputs"] = {{"gamma", gamma_csv}};
            if (gkz_action == "count") {
                gkz::ToricModel m = model_name == "paper" ? gkz::reference_model()
                                                          : gkz::reference_simplex_model();
                long n = gkz::count_torus_points(m.f, p_prime, alpha_res);
                rep["inputs"]["model"] = model_name;
                rep["inputs"]["p"] = p_prime;
                rep["inputs"]["alpha"] = alpha_res;
                rep["results"] = {{"count", n}};
                rep["checks"] = json::array();
                return emit(rep, true);
            }
            gkz::ToricModel m = gkz::realize_monomials(g);
            gkz::GKZSystem sys = gkz::build_gkz(m.monomials);
            rep["results"] = {{"monomials", json::parse(lp_json(m.f))},
                              {"system", json::parse(gkz::gkz_json(sys))},
                              {"f", lp_str(m.f)}};
            std::vector<report::Check> checks;
            if (gkz_action == "restrict") {
                gkz::Restriction r = gkz::restrict_to_line(sys, g, m.kexp);
                rep["results"]["raw"] = json::parse(ore::ore_json(r.raw));
                rep["results"]["normalized"] = json::parse(ore::ore_json(r.normalized));
                auto ratio =
                    ore::ore_proportional(r.normalized, hypergeom::build_reducible_operator(g));
                checks.push_back({"restriction proportional to the uncancelled operator",
                                  "gkz-restriction", ratio ? "pass" : "fail",
                                  ratio ? "unit " + rat_str(*ratio) : ""});
                checks.push_back({"homogeneity operators vanish on the line",
                                  "gkz-euler-operators", r.euler_certificate ? "pass" : "fail",
                                  ""});
            }
            rep["checks"] = check_list(checks);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.status != "fail";
            return emit(rep, ok);
        }
        if (cmd_conic->parsed()) {
            Rat alpha = parse_rat(alpha_str);
            gkz::ToricModel model = gkz::reference_model();
            conic::QuadForm3 chart = conic::conic_chart(model);
            conic::DiagResult diag = conic::diagonalize(chart);
            conic::PlaneCurveModel delta = conic::discriminant(diag.diag);
            conic::PlaneCurveModel cover = conic::double_cover(diag.diag, delta);
            conic::WeightedCurve closureN =
                conic::projective_closure(delta, {1, 1, 1}, {"u0", "u1", "u2"});
            conic::WeightedCurve closureNt =
                conic::projective_closure(cover, {1, 1, 3}, {"x0", "x1", "y"});
            long g_base = conic::genus_from_polytope(delta);
            long g_cover = conic::genus_from_polytope(cover);
            conic::FixedPointData fixed = conic::involution_fixed_points(closureNt);
            conic::SmoothnessCert sm_delta = conic::smoothness_certificate(delta, alpha);
            conic::SmoothnessCert sm_cover = conic::smoothness_certificate(cover, alpha);
            json rep;
            rep["command"] = "conic analyze";
            rep["inputs"] = {{"alpha", rat_str(alpha)}};
            rep["results"] = {
                {"chart", {{"a00", lp_str(chart.a[0][0])}, {"a01", lp_str(chart.a[0][1])},
                           {"a02", lp_str(chart.a[0][2])}, {"a11", lp_str(chart.a[1][1])},
                           {"a12", lp_str(chart.a[1][2])}, {"a22", lp_str(chart.a[2][2])}}},
                {"diagonal", {lp_str(diag.diag.a[0][0]), lp_str(diag.diag.a[1][1]),
                              lp_str(diag.diag.a[2][2])}},
                {"discriminant", lp_str(delta.f)},
                {"cover", lp_str(cover.f)},
                {"closure_plane", lp_str(closureN.F)},
                {"closure_weighted", lp_str(closureNt.F)},
                {"weighted_degree", closureNt.degree},
                {"genera", {g_base, g_cover}},
                {"fixed_points", fixed.count},
                {"fixed_loci", fixed.loci},
                {"anti_invariant_rank", 2 * g_cover - 2 * g_base}};
            std::vector<report::Check> checks;
            checks.push_back({"discriminant smooth on the torus", "discriminant-smoothness",
                              sm_delta.torus_smooth ? "pass" : "fail",
                              sm_delta.resultant1 + " ; " + sm_delta.resultant2});
            checks.push_back({"cover smooth on the torus", "cover-smoothness",
                              sm_cover.torus_smooth ? "pass" : "fail", ""});
            checks.push_back({"anti-invariant rank 8", "anti-invariant-rank",
                              2 * g_cover - 2 * g_base == 8 ? "pass" : "fail", ""});
            rep["checks"] = check_list(checks);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.status != "fail";
            return emit(rep, ok);
        }
        if (cmd_poly->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            gkz::ToricModel m = gkz::realize_monomials(g);
            lattice::PointConfig cfg;
            cfg.dim = m.monomials.dim;
            cfg.points = m.monomials.points;
            lattice::Polytope P = lattice::hull_and_facets(cfg);
            Int vol = lattice::normalized_volume(P);
            std::vector<Int> dv = lattice::delta_vector(P, budget);
            json deltas = json::array();
            Int dsum = 0;
            for (const Int& d : dv) {
                deltas.push_back(d.str());
                dsum += d;
            }
            long interior = (long)lattice::lattice_points(P, 1, true, budget).size();
            json rep;
            rep["command"] = "polytope";
            rep["inputs"] = {{"gamma", gamma_csv}};
            rep["results"] = {{"polytope", json::parse(lattice::polytope_json(P))},
                              {"normalized_volume", vol.str()},
                              {"delta_vector", deltas},
                              {"interior_points", interior}};
            bool ok = dsum == vol;
            rep["checks"] = check_list({{"delta vector sums to the normalized volume",
                                         "ehrhart-volume-identity", ok ? "pass" : "fail", ""}});
            return emit(rep, ok);
        }
        if (cmd_hodge->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            hodge::DimensionReport r = hodge::dimension_identities(g);
            hodge::ChainReport chain = hodge::rank_chain_report();
            json rep;
            rep["command"] = "hodge report";
            json ranks = json::array();
            for (const auto& item : chain.ranks)
                ranks.push_back({{"name", item.name}, {"value", item.value},
                                 {"source", item.source}});
            rep["results"] = {
                {"table", json::parse(hodge::table_json(hodge::reference_table()))},
                {"table_orientation", "entry (p,q) indexes the (p,q) graded piece; (0,0) in the bottom-left"},
                {"volume", r.vol.str()},
                {"dimensions", {r.dim_full.str(), r.dim_primitive.str(), r.dim_relative.str()}},
                {"rank_ledger", ranks},
                {"cokernel_note", chain.cokernel_note},
                {"curve_side_order", chain.curve_side_order}};
            std::vector<report::Check> checks;
            checks.push_back({"rank ledger agrees", "rank-eight-chain",
                              chain.all_equal ? "pass" : "fail", ""});
            checks.push_back({"volume equals the uncancelled order", "volume-rank-identity",
                              r.vol_equals_reducible_order ? "pass" : "fail", ""});
            checks.push_back({"curve-side order is twice the base genus", "curve-side-rank",
                              chain.curve_side_order == chain.curve_side_genus2 ? "pass" : "fail",
                              ""});
            rep["checks"] = check_list(checks);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.status != "fail";
            return emit(rep, ok);
        }
        if (cmd_mono->parsed()) {
            hypergeom::GammaList g = hypergeom::parse_gamma(gamma_csv);
            monodromy::ContinuationConfig cfg;
            cfg.precision_bits = bits;
            cfg.tolerance = parse_rat(tol);
            monodromy::MonodromyReport r = monodromy::monodromy_run(g, cfg);
            monodromy::CertifyResult cert = monodromy::certify(r, cfg);
            json rep = json::parse(monodromy::report_json(r, cert));
            rep["command"] = "monodromy run";
            rep["inputs"] = {{"gamma", gamma_csv}, {"bits", bits}, {"tol", tol}};
            std::cout << rep.dump(2) << "\n";
            std::cerr << "monodromy run: " << (cert.all_pass ? "all checks passed" : "failures")
                      << "\n";
            return cert.all_pass ? 0 : 1;
        }
        if (cmd_verify->parsed()) {
            report::VerifyOptions opt;
            opt.bits = bits;
            opt.tolerance = parse_rat(tol);
            opt.seed = seed;
            opt.budget = budget;
            opt.with_monodromy = !no_mono;
            opt.with_counts = !no_counts;
            std::vector<report::Check> checks = report::verify_all(opt);
            json rep;
            rep["command"] = "verify-all";
            rep["inputs"] = {{"bits", bits}, {"tol", tol}, {"seed", seed}};
            rep["checks"] = check_list(checks);
            for (const auto& c : checks)
                std::cerr << "[" << c.status << "] " << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            bool ok = report::all_pass(checks);
            std::cout << rep.dump(2) << "\n";
            std::cerr << "verify-all: " << (ok ? "all checks passed" : "FAILURES") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
