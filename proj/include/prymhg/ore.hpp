#pragma once

#include "prymhg/exact.hpp"

#include <optional>

namespace prymhg::ore {

// Operators sum_k c_k(alpha) D^k in the algebra generated by alpha and
// D = alpha d/dalpha, with the rewriting rule D o alpha^k = alpha^k o (D+k).
// Coefficients are Laurent polynomials in the single variable "alpha" and
// multiply on the left (i.e. they act after the D-powers).
struct OreOp {
    std::map<long, LaurentPoly> terms;  // D-power -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }
    long order() const;
    void add(long power, const LaurentPoly& coeff);

    bool operator==(const OreOp&) const = default;
};

inline std::vector<std::string> alpha_var() { return {"alpha"}; }

OreOp ore_zero();
OreOp ore_const(const Rat& r);
OreOp ore_d(long power = 1);
OreOp ore_alpha(long exponent = 1);
OreOp ore_from_dpoly(const UniPoly& p);                       // constant coefficients
OreOp ore_from_dpoly(const UniPoly& p, const LaurentPoly& c); // c(alpha) * p(D)

OreOp operator+(const OreOp& a, const OreOp& b);
OreOp operator-(const OreOp& a, const OreOp& b);
OreOp operator-(const OreOp& a);
OreOp operator*(const Rat& s, const OreOp& a);
OreOp ore_multiply(const OreOp& a, const OreOp& b);  // composition, b applied first

std::vector<Rat> apply_to_series(const OreOp& a, const std::vector<Rat>& coeffs, long K);

// does a == c*b for a nonzero rational c?
std::optional<Rat> ore_proportional(const OreOp& a, const OreOp& b);

// expansion into plain derivatives: sum_k p_k(alpha) (d/dalpha)^k with the
// p_k polynomials after clearing a common power of alpha
struct DerivativeForm {
    std::vector<UniPoly> p;  // index = derivative order
    long order() const { return (long)p.size() - 1; }
};
DerivativeForm to_derivative_form(const OreOp& a);

Int stirling2(unsigned long n, unsigned long k);

std::string ore_str(const OreOp& a);
std::string ore_json(const OreOp& a);  // [{"D":k,"coeff":[...]}, ...]

}  // namespace prymhg::ore
