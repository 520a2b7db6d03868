#include "prymhg/conic.hpp"
#include "prymhg/gkz.hpp"
#include "prymhg/hodge.hpp"
#include "prymhg/hypergeom.hpp"
#include "prymhg/lattice.hpp"
#include "prymhg/monodromy.hpp"
#include "prymhg/ore.hpp"
#include "prymhg/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace prymhg;

namespace {

hypergeom::GammaList gamma_of(const std::string& csv) { return hypergeom::parse_gamma(csv); }

py::dict exponent_data(const std::string& gamma) {
    hypergeom::ExponentData ed = hypergeom::reduced_exponents(gamma_of(gamma));
    py::list e0, einf;
    for (const Rat& x : ed.exps0) e0.append(rat_str(x));
    for (const Rat& x : ed.expsInf) einf.append(rat_str(x));
    py::dict d;
    d["order"] = ed.order;
    d["alpha0"] = rat_str(ed.alpha0);
    d["exps0"] = e0;
    d["expsInf"] = einf;
    return d;
}

py::dict toric_model(const std::string& gamma) {
    gkz::ToricModel m = gkz::realize_monomials(gamma_of(gamma));
    py::dict d;
    d["f"] = lp_str(m.f);
    d["monomials"] = m.monomials.points;
    d["kexp"] = m.kexp;
    return d;
}

std::string restriction_unit(const std::string& gamma) {
    hypergeom::GammaList g = gamma_of(gamma);
    gkz::ToricModel m = gkz::realize_monomials(g);
    gkz::GKZSystem sys = gkz::build_gkz(m.monomials);
    gkz::Restriction r = gkz::restrict_to_line(sys, g, m.kexp);
    auto ratio = ore::ore_proportional(r.normalized, hypergeom::build_reducible_operator(g));
    return ratio ? rat_str(*ratio) : std::string();
}

py::dict conic_report() {
    gkz::ToricModel model = gkz::reference_model();
    conic::QuadForm3 chart = conic::conic_chart(model);
    conic::DiagResult diag = conic::diagonalize(chart);
    conic::PlaneCurveModel delta = conic::discriminant(diag.diag);
    conic::PlaneCurveModel cover = conic::double_cover(diag.diag, delta);
    conic::WeightedCurve wN = conic::projective_closure(delta, {1, 1, 1}, {"u0", "u1", "u2"});
    conic::WeightedCurve wNt = conic::projective_closure(cover, {1, 1, 3}, {"x0", "x1", "y"});
    py::dict d;
    d["discriminant"] = lp_str(delta.f);
    d["cover"] = lp_str(cover.f);
    d["closure_plane"] = lp_str(wN.F);
    d["closure_weighted"] = lp_str(wNt.F);
    d["weighted_degree"] = wNt.degree;
    d["genus_base"] = conic::genus_from_polytope(delta);
    d["genus_cover"] = conic::genus_from_polytope(cover);
    d["fixed_points"] = conic::involution_fixed_points(wNt).count;
    return d;
}

py::dict critical_certificate(unsigned bits) {
    conic::CriticalCert c = conic::critical_alpha_certificate(gkz::reference_model(), bits);
    py::dict d;
    d["alpha_sing"] = rat_str(c.alpha_sing);
    d["converged"] = c.converged;
    d["residual"] = c.residual;
    d["proportionality"] = c.proportionality;
    return d;
}

std::string polytope_volume(const std::string& gamma) {
    gkz::ToricModel m = gkz::realize_monomials(gamma_of(gamma));
    lattice::PointConfig cfg;
    cfg.dim = m.monomials.dim;
    cfg.points = m.monomials.points;
    return lattice::normalized_volume(lattice::hull_and_facets(cfg)).str();
}

long count_points(const std::string& model, long p, long alpha) {
    gkz::ToricModel m =
        model == "bcm" ? gkz::reference_simplex_model() : gkz::reference_model();
    return gkz::count_torus_points(m.f, p, alpha);
}

std::string monodromy_json(const std::string& gamma, unsigned bits, const std::string& tol) {
    monodromy::ContinuationConfig cfg;
    cfg.precision_bits = bits;
    cfg.tolerance = parse_rat(tol);
    monodromy::MonodromyReport r = monodromy::monodromy_run(gamma_of(gamma), cfg);
    return monodromy::report_json(r, monodromy::certify(r, cfg));
}

std::string verify(unsigned bits, bool with_monodromy, bool with_counts) {
    report::VerifyOptions opt;
    opt.bits = bits;
    opt.with_monodromy = with_monodromy;
    opt.with_counts = with_counts;
    return report::checks_json(report::verify_all(opt));
}

}  // namespace

PYBIND11_MODULE(prymhg, m) {
    m.doc() = "exact and numerical verification kernel for a hypergeometric pencil and the "
              "conic-bundle geometry attached to it";

    m.def("singular_value",
          [](const std::string& g) { return rat_str(hypergeom::singular_value(gamma_of(g))); },
          py::arg("gamma"), "degeneration value of the family, as an exact rational string");
    m.def("series_coefficient",
          [](const std::string& g, unsigned long j) {
              return rat_str(hypergeom::coefficient(gamma_of(g), j));
          },
          py::arg("gamma"), py::arg("j"));
    m.def("exponent_data", &exponent_data, py::arg("gamma"));
    m.def("charpoly_ratio_check",
          [](const std::string& g) { return hypergeom::bh_ratio_check(gamma_of(g)); },
          py::arg("gamma"));
    m.def("factorization_check",
          [](const std::string& g) {
              hypergeom::GammaList gl = gamma_of(g);
              return ore::ore_multiply(hypergeom::cancellation_cofactor(gl),
                                       hypergeom::build_irreducible_operator(gl)) ==
                     hypergeom::build_reducible_operator(gl);
          },
          py::arg("gamma"));
    m.def("irreducible_operator",
          [](const std::string& g) {
              return ore::ore_json(hypergeom::build_irreducible_operator(gamma_of(g)));
          },
          py::arg("gamma"));
    m.def("reducible_operator",
          [](const std::string& g) {
              return ore::ore_json(hypergeom::build_reducible_operator(gamma_of(g)));
          },
          py::arg("gamma"));
    m.def("toric_model", &toric_model, py::arg("gamma"));
    m.def("restriction_unit", &restriction_unit, py::arg("gamma"),
          "rational unit relating the restricted system to the uncancelled operator "
          "(empty string when they are not proportional)");
    m.def("normalized_volume", &polytope_volume, py::arg("gamma"));
    m.def("count_points", &count_points, py::arg("model"), py::arg("p"), py::arg("alpha"));
    m.def("conic_report", &conic_report);
    m.def("critical_certificate", &critical_certificate, py::arg("bits") = 256);
    m.def("hodge_table_json", [] { return hodge::table_json(hodge::reference_table()); });
    m.def("monodromy_json", &monodromy_json, py::arg("gamma") = "-18,-1,2,3,5,9",
          py::arg("bits") = 192, py::arg("tol") = "1/100000000");
    m.def("verify", &verify, py::arg("bits") = 192, py::arg("with_monodromy") = true,
          py::arg("with_counts") = true, "run the acceptance ledger; returns the checks as JSON");
}
