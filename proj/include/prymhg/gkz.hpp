#pragma once

#include "prymhg/hypergeom.hpp"
#include "prymhg/lattice.hpp"
#include "prymhg/ore.hpp"

namespace prymhg::gkz {

// Laurent hypersurface model attached to a gamma list: monomial exponents
// m_i with sum gamma_i m_i = 0, twist exponents k_i with sum k_i gamma_i = 1,
// and the polynomial f = sum (-alpha)^{k_i} u^{m_i}.
struct ToricModel {
    hypergeom::GammaList gamma;
    lattice::PointConfig monomials;  // labels carry the gamma entries
    std::vector<long> kexp;
    LaurentPoly f;  // vars: alpha, u1..ud
};

ToricModel make_model(const hypergeom::GammaList& g,
                      const std::vector<std::vector<long>>& monomials,
                      const std::vector<long>& kexp);
ToricModel realize_monomials(const hypergeom::GammaList& g);

// the two explicit six-monomial models in Z^4 for gamma = (-18,-1,2,3,5,9):
// the conic-bundle chart model and the reflexive-simplex style model
ToricModel reference_model();
ToricModel reference_simplex_model();
// monomial images of the torus change of coordinates carrying the simplex
// model onto the chart model
std::vector<LaurentPoly> reference_coordinate_change();

struct BoxOp {
    std::vector<long> plus, minus;  // exponents of the two derivative products
};

struct GKZSystem {
    lattice::PointConfig A;
    lattice::PointConfig Abar;                  // rows (1, a_i) stacked as points
    std::vector<std::vector<long>> euler_ops;   // covector rows
    std::vector<BoxOp> box_ops;
    std::vector<Rat> beta;                      // fixed to zero
};

GKZSystem build_gkz(const lattice::PointConfig& A);

struct Restriction {
    ore::OreOp raw;         // operator from the box rewrite, reported after w = -alpha
    ore::OreOp normalized;  // same with the infinity-side integer exponents shifted 0 -> 1
    bool euler_certificate; // every euler covector pairs to zero with gamma
};

Restriction restrict_to_line(const GKZSystem& sys, const hypergeom::GammaList& g,
                             const std::vector<long>& kexp);

// brute-force point count of (f = 0) on the torus (F_p^x)^n with alpha
// specialized; f's variables must start with "alpha"
long count_torus_points(const LaurentPoly& f, long p, long alphaval);
std::vector<long> count_torus_points_all_alpha(const LaurentPoly& f, long p);

// zeros of a curve model (vars alpha,u1,u2) on the 2-torus at alpha = alphaval
std::vector<std::pair<long, long>> torus_zeros_2d(const LaurentPoly& f, long p, long alphaval);

std::string gkz_json(const GKZSystem& sys);

}  // namespace prymhg::gkz
