#pragma once

#include "prymhg/hypergeom.hpp"
#include "prymhg/mpcx.hpp"
#include "prymhg/ore.hpp"

namespace prymhg::monodromy {

struct ContinuationConfig {
    unsigned precision_bits = 192;
    Rat step_safety = Rat(1, 2);        // step radius <= safety * singular clearance
    Rat base_point = Rat(1, 2);         // on (0,1), in units of the finite singular value
    Rat loop_radius_factor = Rat(1, 2); // loop radius = factor * distance between 0 and alpha0
    Rat tolerance = Rat(1, 100000000);
    long min_segments = 16;
    bool with_product_loop = true;
};

struct MonodromyReport {
    long order = 0;
    unsigned bits = 0;
    std::string tolerance;
    // matrices in the (y, Dy, ..., D^{n-1}y) basis at the base point, (re,im) strings
    std::vector<std::vector<std::pair<std::string, std::string>>> M0, Ma0;
    double charpoly_residual_0 = 0;    // char(M0^{-1}) against the local prediction at 0
    double charpoly_residual_inf = 0;  // char((Ma0 M0)^{-1}) against the prediction at infinity
    double det_residual_0 = 0;
    double det_residual_a0 = 0;
    long reflection_rank = -1;  // rank of Ma0 - I at the singular-value threshold
    double product_residual = -1;
    std::string product_convention;
};

MonodromyReport monodromy_run(const hypergeom::GammaList& g, const ContinuationConfig& cfg);

struct CertifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct CertifyResult {
    std::vector<CertifyItem> items;
    bool all_pass = false;
};
CertifyResult certify(const MonodromyReport& r, const ContinuationConfig& cfg);

// scalar ODE sum_i p_i(beta) y^(i) = 0 in the rescaled coordinate
// beta = alpha / alpha0, so the finite singular points sit at 0 and 1
struct NumericOde {
    long order = 0;
    std::vector<std::vector<mp::Cx>> p;  // p[i][d] = coefficient of beta^d
};
NumericOde ode_from_operator(const ore::OreOp& op, const Rat& alpha0);

// transport of Taylor jets (columns; entry m is y^(m)/m!) along the straight
// segment from center to center+h; throws if h violates the safety clearance
mp::CMat taylor_step(const NumericOde& ode, const mp::Cx& center, const mp::Cx& h,
                     const mp::CMat& jets, const mp::Real& tol, const Rat& step_safety);

std::string report_json(const MonodromyReport& r, const CertifyResult& c);

}  // namespace prymhg::monodromy
