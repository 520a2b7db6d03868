#include "prymhg/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prymhg {

Int factorial(unsigned long n) {
    Int r = 1;
    for (unsigned long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= (Int)(n - i);
        r /= (Int)(i + 1);
    }
    return r;
}

Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (b == 0 && e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    Rat acc = 1;
    Rat base = e > 0 ? b : Rat(1) / b;
    unsigned long n = (unsigned long)(e > 0 ? e : -e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string rat_str(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    return Rat(num) / Rat(den);
}

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const Rat& r) {
    UniPoly p;
    if (r != 0) p.c = {r};
    return p;
}

UniPoly UniPoly::var() {
    UniPoly p;
    p.c = {Rat(0), Rat(1)};
    return p;
}

long UniPoly::degree() const {
    if (c.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    return (long)c.size() - 1;
}

const Rat& UniPoly::lc() const {
    if (c.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c.back();
}

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
    if (s == 0) return UniPoly();
    UniPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::pair<UniPoly, UniPoly> upoly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r = a;
    if (a.is_zero() || a.c.size() < b.c.size()) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
    while (!r.is_zero() && r.c.size() >= b.c.size()) {
        size_t shift = r.c.size() - b.c.size();
        Rat f = r.c.back() / b.lc();
        q.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

UniPoly upoly_divexact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = upoly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("upoly_divexact: division is not exact");
    return q;
}

UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = upoly_divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (!x.is_zero()) x = (Rat(1) / x.lc()) * x;
    return x;
}

UniPoly upoly_pow(const UniPoly& a, unsigned long e) {
    UniPoly r = UniPoly::constant(1);
    for (unsigned long i = 0; i < e; ++i) r = r * a;
    return r;
}

UniPoly upoly_from_roots(const std::vector<Rat>& roots) {
    UniPoly r = UniPoly::constant(1);
    for (const Rat& root : roots) r = r * UniPoly({-root, Rat(1)});
    return r;
}

UniPoly upoly_derivative(const UniPoly& a) {
    UniPoly r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(Rat((long)i) * a.c[i]);
    r.normalize();
    return r;
}

UniPoly upoly_scale_var(const UniPoly& a, const Rat& s) {
    UniPoly r = a;
    Rat p = 1;
    for (size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] *= p;
        p *= s;
    }
    r.normalize();
    return r;
}

Rat upoly_eval(const UniPoly& a, const Rat& x) {
    Rat r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

std::string upoly_str(const UniPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        Rat v = a.c[i];
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        Rat av = v > 0 ? v : Rat(-v);
        if (i == 0 || av != 1) os << rat_str(av);
        if (i > 0) {
            if (av != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly cyclotomic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    // t^n - 1 divided by the product of all lower cyclotomic factors
    UniPoly tn;
    tn.c.assign(n + 1, Rat(0));
    tn.c[0] = -1;
    tn.c[n] = 1;
    UniPoly q = tn;
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) q = upoly_divexact(q, cyclotomic(d));
    return q;
}

// ------------------------------------------------------------ LaurentPoly

void LaurentPoly::add_term(const std::vector<long>& e, const Rat& coeff) {
    if ((int)e.size() != arity()) throw std::invalid_argument("exponent vector has wrong length");
    if (coeff == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

LaurentPoly lp_const(const std::vector<std::string>& vars, const Rat& r) {
    LaurentPoly f(vars);
    f.add_term(std::vector<long>(vars.size(), 0), r);
    return f;
}

LaurentPoly lp_monomial(const std::vector<std::string>& vars, const std::vector<long>& e,
                        const Rat& coeff) {
    LaurentPoly f(vars);
    f.add_term(e, coeff);
    return f;
}

LaurentPoly lp_var(const std::vector<std::string>& vars, int i, long exp) {
    std::vector<long> e(vars.size(), 0);
    e.at((size_t)i) = exp;
    return lp_monomial(vars, e, Rat(1));
}

static void check_same_context(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars != b.vars)
        throw std::invalid_argument("Laurent polynomials live in different variable contexts");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_context(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_context(a, b);
    LaurentPoly r(a.vars);
    std::vector<long> e((size_t)a.arity());
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly operator*(const Rat& s, const LaurentPoly& a) {
    LaurentPoly r(a.vars);
    if (s == 0) return r;
    r = a;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, long e) {
    if (e == 0) return lp_const(a.vars, Rat(1));
    if (e < 0) {
        if (a.n_terms() != 1)
            throw std::domain_error("negative power of a non-monomial Laurent polynomial");
        const auto& [exp, c] = *a.terms.begin();
        std::vector<long> ne(exp.size());
        for (size_t i = 0; i < exp.size(); ++i) ne[i] = exp[i] * e;
        return lp_monomial(a.vars, ne, rat_pow(c, e));
    }
    LaurentPoly r = lp_const(a.vars, Rat(1));
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
}

LaurentPoly laurent_substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images) {
    if ((int)images.size() != f.arity())
        throw std::invalid_argument("laurent_substitute: one image per variable required");
    if (images.empty()) return f;
    const auto& tvars = images[0].vars;
    std::vector<std::vector<long>> im_exp;
    std::vector<int> im_sign;
    for (const auto& g : images) {
        if (g.vars != tvars)
            throw std::invalid_argument("laurent_substitute: images in mixed variable contexts");
        if (g.n_terms() != 1)
            throw std::invalid_argument("laurent_substitute: image is not a single monomial");
        const auto& [e, c] = *g.terms.begin();
        if (c != 1 && c != -1)
            throw std::invalid_argument("laurent_substitute: image coefficient must be +-1");
        im_exp.push_back(e);
        im_sign.push_back(c == 1 ? 1 : -1);
    }
    LaurentPoly r(tvars);
    std::vector<long> e(tvars.size());
    for (const auto& [fe, fc] : f.terms) {
        std::fill(e.begin(), e.end(), 0L);
        int sign = 1;
        for (size_t i = 0; i < fe.size(); ++i) {
            if (fe[i] == 0) continue;
            for (size_t j = 0; j < e.size(); ++j) e[j] += fe[i] * im_exp[i][j];
            if (im_sign[i] < 0 && (fe[i] & 1L)) sign = -sign;
        }
        r.add_term(e, sign > 0 ? fc : Rat(-fc));
    }
    return r;
}

bool poly_identity_check(const UniPoly& lhs, const UniPoly& rhs) { return lhs == rhs; }

bool poly_identity_check(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.arity() != rhs.arity())
        throw std::invalid_argument("poly_identity_check: mismatched arity");
    return lhs == rhs;
}

LaurentPoly lp_derivative(const LaurentPoly& f, int var) {
    LaurentPoly r(f.vars);
    for (const auto& [e, c] : f.terms) {
        if (e[(size_t)var] == 0) continue;
        auto ne = e;
        ne[(size_t)var] -= 1;
        r.add_term(ne, Rat(e[(size_t)var]) * c);
    }
    return r;
}

LaurentPoly lp_theta(const LaurentPoly& f, int var) {
    LaurentPoly r(f.vars);
    for (const auto& [e, c] : f.terms) r.add_term(e, Rat(e[(size_t)var]) * c);
    return r;
}

LaurentPoly lp_specialize(const LaurentPoly& f, int var, const Rat& value) {
    std::vector<std::string> nv;
    for (int i = 0; i < f.arity(); ++i)
        if (i != var) nv.push_back(f.vars[(size_t)i]);
    LaurentPoly r(nv);
    for (const auto& [e, c] : f.terms) {
        std::vector<long> ne;
        ne.reserve(nv.size());
        for (int i = 0; i < f.arity(); ++i)
            if (i != var) ne.push_back(e[(size_t)i]);
        r.add_term(ne, c * rat_pow(value, e[(size_t)var]));
    }
    return r;
}

Rat lp_eval(const LaurentPoly& f, const std::vector<Rat>& values) {
    if ((int)values.size() != f.arity())
        throw std::invalid_argument("lp_eval: wrong number of values");
    Rat r = 0;
    for (const auto& [e, c] : f.terms) {
        Rat t = c;
        for (size_t i = 0; i < values.size(); ++i) t *= rat_pow(values[i], e[i]);
        r += t;
    }
    return r;
}

long lp_min_exp(const LaurentPoly& f, int var) {
    if (f.is_zero()) return 0;
    long m = f.terms.begin()->first[(size_t)var];
    for (const auto& [e, c] : f.terms) m = std::min(m, e[(size_t)var]);
    return m;
}

long lp_max_exp(const LaurentPoly& f, int var) {
    if (f.is_zero()) return 0;
    long m = f.terms.begin()->first[(size_t)var];
    for (const auto& [e, c] : f.terms) m = std::max(m, e[(size_t)var]);
    return m;
}

int lp_var_index(const LaurentPoly& f, const std::string& name) {
    for (int i = 0; i < f.arity(); ++i)
        if (f.vars[(size_t)i] == name) return i;
    return -1;
}

std::map<long, LaurentPoly> lp_as_univariate(const LaurentPoly& f, int var) {
    std::map<long, LaurentPoly> r;
    for (const auto& [e, c] : f.terms) {
        long d = e[(size_t)var];
        auto it = r.find(d);
        if (it == r.end()) it = r.emplace(d, LaurentPoly(f.vars)).first;
        auto ne = e;
        ne[(size_t)var] = 0;
        it->second.add_term(ne, c);
    }
    return r;
}

LaurentPoly lp_from_univariate(const std::map<long, LaurentPoly>& coeffs, int var) {
    if (coeffs.empty()) throw std::invalid_argument("lp_from_univariate: empty coefficient map");
    LaurentPoly r(coeffs.begin()->second.vars);
    for (const auto& [d, p] : coeffs)
        for (const auto& [e, c] : p.terms) {
            auto ne = e;
            ne[(size_t)var] += d;
            r.add_term(ne, c);
        }
    return r;
}

LaurentPoly lp_strip_monomial_content(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    std::vector<long> mins = f.terms.begin()->first;
    for (const auto& [e, c] : f.terms)
        for (size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    LaurentPoly r(f.vars);
    for (const auto& [e, c] : f.terms) {
        auto ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= mins[i];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly lp_make_primitive(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    // content = gcd(numerators) / lcm(denominators)
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms) {
        num_gcd = boost::multiprecision::gcd(num_gcd, (Int)boost::multiprecision::abs(
                                                          boost::multiprecision::numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rat content = Rat(num_gcd) / Rat(den_lcm);
    return (Rat(1) / content) * f;
}

std::string lp_str(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        Rat av = c > 0 ? c : Rat(-c);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        bool printed = false;
        bool all_zero = true;
        for (long x : e) all_zero = all_zero && x == 0;
        if (av != 1 || all_zero) {
            os << rat_str(av);
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << f.vars[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::string lp_json(const LaurentPoly& f) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        if (!first) os << ",";
        first = false;
        os << "{\"c\":\"" << rat_str(c) << "\",\"e\":[";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "]}";
    }
    os << "]";
    return os.str();
}

}  // namespace prymhg
