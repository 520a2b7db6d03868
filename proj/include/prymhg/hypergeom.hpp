#pragma once

#include "prymhg/exact.hpp"
#include "prymhg/ore.hpp"

namespace prymhg::hypergeom {

// Balanced integer vector encoding a hypergeometric datum.  Negative entries
// contribute factorials to the numerator of the series coefficients.
struct GammaList {
    std::vector<long> entries;
};

GammaList parse_gamma(const std::string& csv);
void validate_gamma(const GammaList& g);  // throws on unbalanced or sign-degenerate input
std::string gamma_str(const GammaList& g);

// A_j = prod_{g<0} (|g| j)! / prod_{g>0} (g j)!
Rat coefficient(const GammaList& g, unsigned long j);

// prod |g_i|^{g_i}; the radius-of-convergence value where the family degenerates
Rat singular_value(const GammaList& g);

struct ExponentData {
    std::vector<Rat> exps0;     // local exponents at 0, sorted
    std::vector<Rat> expsInf;   // local exponents at infinity, sorted
    std::vector<Rat> cancelled; // common multiset removed from both sides
    long order = 0;
    Rat alpha0;
};

ExponentData reduced_exponents(const GammaList& g);

// H = alpha0 * prod_b (D - b) - alpha * prod_a (D + a) over the reduced exponents
ore::OreOp build_irreducible_operator(const GammaList& g);

// order sum(|g_i|)/2 operator over the uncancelled exponents, with the
// infinity-side integer exponents normalized from 0 to 1
ore::OreOp build_reducible_operator(const GammaList& g);

// cofactor with the cancelled multiset as roots; its product with the
// irreducible operator reproduces the reducible one
ore::OreOp cancellation_cofactor(const GammaList& g);

// prod (t - e^{2 pi i a}) over an exponent multiset, assembled exactly from
// cyclotomic factors; throws if the multiset is not a union of full orbits
// of primitive roots
UniPoly charpoly_from_exponents(const std::vector<Rat>& exps);

// char-poly ratio identity: q_inf * prod_{g>0}(t^g - 1) = q_0 * prod_{g<0}(t^|g| - 1)
bool bh_ratio_check(const GammaList& g);

// all A_j integral for j <= N (empirical check only)
bool integrality_scan(const GammaList& g, unsigned long N);

}  // namespace prymhg::hypergeom
