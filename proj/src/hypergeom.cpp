#include "prymhg/hypergeom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prymhg::hypergeom {

GammaList parse_gamma(const std::string& csv) {
    GammaList g;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        g.entries.push_back(std::stol(item));
    }
    validate_gamma(g);
    return g;
}

void validate_gamma(const GammaList& g) {
    long sum = 0;
    bool pos = false, neg = false;
    for (long e : g.entries) {
        if (e == 0) throw std::invalid_argument("gamma list contains a zero entry");
        sum += e;
        pos = pos || e > 0;
        neg = neg || e < 0;
    }
    if (sum != 0) throw std::invalid_argument("gamma list is not balanced (entries must sum to 0)");
    if (!pos || !neg)
        throw std::invalid_argument("gamma list needs at least one positive and one negative entry");
}

std::string gamma_str(const GammaList& g) {
    std::ostringstream os;
    for (size_t i = 0; i < g.entries.size(); ++i) os << (i ? "," : "") << g.entries[i];
    return os.str();
}

Rat coefficient(const GammaList& g, unsigned long j) {
    Rat r = 1;
    for (long e : g.entries) {
        unsigned long n = (unsigned long)(e > 0 ? e : -e) * j;
        if (e < 0)
            r *= Rat(factorial(n));
        else
            r /= Rat(factorial(n));
    }
    return r;
}

Rat singular_value(const GammaList& g) {
    validate_gamma(g);
    Rat r = 1;
    for (long e : g.entries) r *= rat_pow(Rat(e > 0 ? e : -e), e);
    return r;
}

ExponentData reduced_exponents(const GammaList& g) {
    validate_gamma(g);
    std::map<Rat, long> s0, sInf;
    for (long e : g.entries) {
        long n = e > 0 ? e : -e;
        for (long k = 0; k < n; ++k) {
            Rat x = Rat(k) / Rat(n);
            if (e > 0)
                s0[x] += 1;
            else
                sInf[x] += 1;
        }
    }
    ExponentData d;
    d.alpha0 = singular_value(g);
    for (auto& [x, m0] : s0) {
        auto it = sInf.find(x);
        long common = it == sInf.end() ? 0 : std::min(m0, it->second);
        for (long i = 0; i < common; ++i) d.cancelled.push_back(x);
        m0 -= common;
        if (it != sInf.end()) it->second -= common;
    }
    for (const auto& [x, m] : s0)
        for (long i = 0; i < m; ++i) d.exps0.push_back(x);
    for (const auto& [x, m] : sInf)
        for (long i = 0; i < m; ++i) d.expsInf.push_back(x);
    if (d.exps0.size() != d.expsInf.size())
        throw std::logic_error("exponent cancellation left unbalanced multisets");
    d.order = (long)d.exps0.size();
    return d;
}

ore::OreOp build_irreducible_operator(const GammaList& g) {
    ExponentData d = reduced_exponents(g);
    UniPoly p0 = upoly_from_roots(d.exps0);
    std::vector<Rat> neg;
    for (const Rat& a : d.expsInf) neg.push_back(Rat(-a));
    UniPoly pInf = upoly_from_roots(neg);
    using namespace ore;
    LaurentPoly alpha = lp_monomial(alpha_var(), {1}, Rat(1));
    return ore_from_dpoly(p0, lp_const(alpha_var(), d.alpha0)) - ore_from_dpoly(pInf, alpha);
}

ore::OreOp build_reducible_operator(const GammaList& g) {
    validate_gamma(g);
    std::vector<Rat> roots0, rootsInf;
    for (long e : g.entries) {
        long n = e > 0 ? e : -e;
        for (long k = 0; k < n; ++k) {
            if (e > 0)
                roots0.push_back(Rat(k) / Rat(n));
            else
                rootsInf.push_back(Rat(-(k + 1)) / Rat(n));  // exponents 1/n .. n/n
        }
    }
    UniPoly p0 = upoly_from_roots(roots0);
    UniPoly pInf = upoly_from_roots(rootsInf);
    using namespace ore;
    LaurentPoly alpha = lp_monomial(alpha_var(), {1}, Rat(1));
    return ore_from_dpoly(p0, lp_const(alpha_var(), singular_value(g))) -
           ore_from_dpoly(pInf, alpha);
}

ore::OreOp cancellation_cofactor(const GammaList& g) {
    ExponentData d = reduced_exponents(g);
    return ore::ore_from_dpoly(upoly_from_roots(d.cancelled));
}

UniPoly charpoly_from_exponents(const std::vector<Rat>& exps) {
    // each exponent k/n in lowest terms contributes a primitive n-th root of
    // unity; full orbits assemble into cyclotomic factors
    std::map<unsigned long, std::map<Int, long>> orbits;  // n -> residue -> multiplicity
    for (Rat x : exps) {
        // reduce into [0,1)
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        Int r = num % den;
        if (r < 0) r += den;
        if (r == 0) den = 1, r = 0;
        orbits[(unsigned long)den][r] += 1;
    }
    UniPoly q = UniPoly::constant(1);
    for (const auto& [n, residues] : orbits) {
        long mult = residues.begin()->second;
        unsigned long totient = 0;
        for (unsigned long k = 0; k < n; ++k)
            if (boost::multiprecision::gcd(Int(k), Int(n)) == 1) ++totient;
        if (n == 1) totient = 1;
        if (residues.size() != totient)
            throw std::runtime_error("exponent class does not form full primitive-root orbits (n=" +
                                     std::to_string(n) + ")");
        for (const auto& [r, m] : residues)
            if (m != mult)
                throw std::runtime_error("exponent class has uneven multiplicities (n=" +
                                         std::to_string(n) + ")");
        q = q * upoly_pow(cyclotomic(n), (unsigned long)mult);
    }
    return q;
}

bool bh_ratio_check(const GammaList& g) {
    ExponentData d = reduced_exponents(g);
    UniPoly q0 = charpoly_from_exponents(d.exps0);
    UniPoly qInf = charpoly_from_exponents(d.expsInf);
    UniPoly lhs = qInf, rhs = q0;
    for (long e : g.entries) {
        unsigned long n = (unsigned long)(e > 0 ? e : -e);
        UniPoly tn;  // t^n - 1
        tn.c.assign(n + 1, Rat(0));
        tn.c[0] = -1;
        tn.c[n] = 1;
        if (e > 0)
            lhs = lhs * tn;
        else
            rhs = rhs * tn;
    }
    return poly_identity_check(lhs, rhs);
}

bool integrality_scan(const GammaList& g, unsigned long N) {
    for (unsigned long j = 0; j <= N; ++j)
        if (boost::multiprecision::denominator(coefficient(g, j)) != 1) return false;
    return true;
}

}  // namespace prymhg::hypergeom
