#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymhg {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Rat rat_pow(const Rat& b, long e);
std::string rat_str(const Rat& x);  // "p/q", or "p" when q = 1
Rat parse_rat(const std::string& s);

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Q; coefficient index = degree.
// The zero polynomial is the empty coefficient vector; its degree is
// undefined and must be guarded by is_zero().
// ---------------------------------------------------------------------------
struct UniPoly {
    std::vector<Rat> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    static UniPoly constant(const Rat& r);
    static UniPoly var();  // the monomial t

    bool is_zero() const { return c.empty(); }
    long degree() const;
    const Rat& lc() const;
    Rat coeff(long k) const { return (k >= 0 && k < (long)c.size()) ? c[(size_t)k] : Rat(0); }
    void normalize();

    bool operator==(const UniPoly&) const = default;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rat& s, const UniPoly& a);
UniPoly operator-(const UniPoly& a);

// quotient/remainder in Q[t]; divisor must be nonzero
std::pair<UniPoly, UniPoly> upoly_divmod(const UniPoly& a, const UniPoly& b);
UniPoly upoly_divexact(const UniPoly& a, const UniPoly& b);  // throws if remainder != 0
UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b);       // monic
UniPoly upoly_pow(const UniPoly& a, unsigned long e);
UniPoly upoly_from_roots(const std::vector<Rat>& roots);     // prod (t - r)
UniPoly upoly_derivative(const UniPoly& a);
UniPoly upoly_scale_var(const UniPoly& a, const Rat& s);     // a(s*t)
Rat upoly_eval(const UniPoly& a, const Rat& x);
std::string upoly_str(const UniPoly& a, const std::string& var = "t");

// n-th cyclotomic polynomial, monic with integer coefficients
UniPoly cyclotomic(unsigned long n);

// ---------------------------------------------------------------------------
// Sparse multivariate Laurent polynomial over Q.  Terms are keyed by the
// exponent vector (length = arity) in lexicographic order; zero coefficients
// are never stored, so equality of the term maps is equality of polynomials.
// ---------------------------------------------------------------------------
struct LaurentPoly {
    std::vector<std::string> vars;
    std::map<std::vector<long>, Rat> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> names) : vars(std::move(names)) {}

    int arity() const { return (int)vars.size(); }
    bool is_zero() const { return terms.empty(); }
    size_t n_terms() const { return terms.size(); }
    void add_term(const std::vector<long>& e, const Rat& coeff);

    bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly lp_const(const std::vector<std::string>& vars, const Rat& r);
LaurentPoly lp_monomial(const std::vector<std::string>& vars, const std::vector<long>& e,
                        const Rat& coeff);
LaurentPoly lp_var(const std::vector<std::string>& vars, int i, long exp = 1);

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Rat& s, const LaurentPoly& a);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly lp_pow(const LaurentPoly& a, long e);  // e < 0 only for single-term a

// substitution of one monomial image per variable; every image must be a
// single term with coefficient +1 or -1 (invertible on the torus)
LaurentPoly laurent_substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images);

bool poly_identity_check(const UniPoly& lhs, const UniPoly& rhs);
bool poly_identity_check(const LaurentPoly& lhs, const LaurentPoly& rhs);

LaurentPoly lp_derivative(const LaurentPoly& f, int var);          // d/du_i
LaurentPoly lp_theta(const LaurentPoly& f, int var);               // u_i d/du_i
LaurentPoly lp_specialize(const LaurentPoly& f, int var, const Rat& value);  // drops the variable
Rat lp_eval(const LaurentPoly& f, const std::vector<Rat>& values);
long lp_min_exp(const LaurentPoly& f, int var);
long lp_max_exp(const LaurentPoly& f, int var);
int lp_var_index(const LaurentPoly& f, const std::string& name);   // -1 if absent

// view f as a polynomial in variable `var`: exponent -> coefficient
// (coefficients keep the full variable list with exponent 0 in `var`)
std::map<long, LaurentPoly> lp_as_univariate(const LaurentPoly& f, int var);
LaurentPoly lp_from_univariate(const std::map<long, LaurentPoly>& coeffs, int var);

// divide out the monomial content (per-variable minimum exponents) and the
// rational content, leaving a primitive integer-coefficient polynomial;
// the returned sign is chosen by the caller-visible normalizers
LaurentPoly lp_strip_monomial_content(const LaurentPoly& f);
LaurentPoly lp_make_primitive(const LaurentPoly& f);

std::string lp_str(const LaurentPoly& f);
std::string lp_json(const LaurentPoly& f);  // [{"c":"p/q","e":[...]}, ...]

}  // namespace prymhg
