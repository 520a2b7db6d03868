#pragma once

#include "prymhg/gkz.hpp"
#include "prymhg/lattice.hpp"

#include <array>

namespace prymhg::conic {

// symmetric 3x3 quadratic form with Laurent coefficients in (alpha, u1, u2)
struct QuadForm3 {
    std::array<std::array<LaurentPoly, 3>, 3> a;
};

// fiberwise quadratic chart of a toric model that is quadratic in its last
// two torus variables (x1 = u3/1, x2 = u4/1 on the x0 != 0 chart)
QuadForm3 conic_chart(const gkz::ToricModel& model);

LaurentPoly quad_det(const QuadForm3& q);
int quad_rank_at(const QuadForm3& q, const Rat& alpha, const Rat& u1, const Rat& u2);

struct DiagResult {
    QuadForm3 diag;
    std::array<std::array<LaurentPoly, 3>, 3> subs;  // x_old = S x_new, S^T Q S = diag
};
DiagResult diagonalize(const QuadForm3& q);

struct PlaneCurveModel {
    LaurentPoly f;                    // vars: alpha, u1, u2
    std::vector<long> lattice_scale;  // per-variable index of the written exponent lattice
    bool empty = false;               // det was a unit; no curve
};

// determinant of the diagonal form, normalized to a primitive
// integer-coefficient polynomial with positive top u2-power coefficient
PlaneCurveModel discriminant(const QuadForm3& diag);

// double cover along the 2x2 minor delta_k (k = 1 supported); substitutes the
// square-root coordinate and records the finer exponent lattice
PlaneCurveModel double_cover(const QuadForm3& diag, const PlaneCurveModel& delta,
                             int minor_index = 1);

struct WeightedCurve {
    LaurentPoly F;  // vars: alpha, then the weighted homogeneous coordinates
    std::vector<long> weights;
    long degree = 0;
};

WeightedCurve projective_closure(const PlaneCurveModel& c, const std::vector<long>& weights,
                                 const std::vector<std::string>& names);

long genus_from_polytope(const PlaneCurveModel& c);

struct FixedPointData {
    long count = 0;
    std::vector<std::string> loci;
};
// fixed points of the sign involution on the middle weight-1 coordinate,
// counted set-theoretically on a curve in P(1,1,3)
FixedPointData involution_fixed_points(const WeightedCurve& w);

struct SmoothnessCert {
    bool torus_smooth = false;
    bool resolved = false;  // all elimination candidates settled exactly
    std::vector<std::pair<Rat, Rat>> singular_points;  // rational witnesses found
    std::string resultant1, resultant2;
};
SmoothnessCert smoothness_certificate(const PlaneCurveModel& c, const Rat& alpha_sample);

struct CriticalCert {
    Rat alpha_sing;
    bool converged = false;
    std::string residual;              // max norm of (f, u grad f) at the witness
    std::string proportionality;       // max pairwise deviation of t_i / gamma_i
    std::vector<std::string> witness;  // complex coordinates of the critical point
};
CriticalCert critical_alpha_certificate(const gkz::ToricModel& model, unsigned bits = 256);

// resultant of f and g with respect to one variable (Sylvester determinant
// after clearing the variable's monomial content)
LaurentPoly lp_resultant(const LaurentPoly& f, const LaurentPoly& g, int var);

}  // namespace prymhg::conic
