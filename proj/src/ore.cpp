#include "prymhg/ore.hpp"

#include <sstream>

namespace prymhg::ore {

long OreOp::order() const {
    if (terms.empty()) throw std::domain_error("order of the zero operator");
    return terms.rbegin()->first;
}

void OreOp::add(long power, const LaurentPoly& coeff) {
    if (power < 0) throw std::invalid_argument("negative D-power");
    if (coeff.is_zero()) return;
    auto it = terms.find(power);
    if (it == terms.end()) {
        terms.emplace(power, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

OreOp ore_zero() { return OreOp{}; }

OreOp ore_const(const Rat& r) {
    OreOp a;
    a.add(0, lp_const(alpha_var(), r));
    return a;
}

OreOp ore_d(long power) {
    OreOp a;
    a.add(power, lp_const(alpha_var(), Rat(1)));
    return a;
}

OreOp ore_alpha(long exponent) {
    OreOp a;
    a.add(0, lp_monomial(alpha_var(), {exponent}, Rat(1)));
    return a;
}

OreOp ore_from_dpoly(const UniPoly& p) { return ore_from_dpoly(p, lp_const(alpha_var(), Rat(1))); }

OreOp ore_from_dpoly(const UniPoly& p, const LaurentPoly& c) {
    OreOp a;
    for (size_t k = 0; k < p.c.size(); ++k)
        if (p.c[k] != 0) a.add((long)k, p.c[k] * c);
    return a;
}

OreOp operator+(const OreOp& a, const OreOp& b) {
    OreOp r = a;
    for (const auto& [k, c] : b.terms) r.add(k, c);
    return r;
}

OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }

OreOp operator-(const OreOp& a) {
    OreOp r;
    for (const auto& [k, c] : a.terms) r.add(k, -c);
    return r;
}

OreOp operator*(const Rat& s, const OreOp& a) {
    OreOp r;
    if (s == 0) return r;
    for (const auto& [k, c] : a.terms) r.add(k, s * c);
    return r;
}

OreOp ore_multiply(const OreOp& a, const OreOp& b) {
    // c_a(alpha) D^m o c_b(alpha) D^n: move D^m across each monomial of c_b
    // with D^m o alpha^e = alpha^e (D+e)^m
    OreOp r;
    for (const auto& [m, ca] : a.terms) {
        for (const auto& [n, cb] : b.terms) {
            for (const auto& [e, coeff] : cb.terms) {
                long ee = e[0];
                // (D+ee)^m expanded binomially
                for (long i = 0; i <= m; ++i) {
                    Rat binom_term = Rat(binomial((unsigned long)m, (unsigned long)i)) *
                                     rat_pow(Rat(ee), m - i);
                    if (binom_term == 0) continue;
                    LaurentPoly piece = (binom_term * coeff) * ca;
                    LaurentPoly shifted(alpha_var());
                    for (const auto& [pe, pc] : piece.terms)
                        shifted.add_term({pe[0] + ee}, pc);
                    r.add(i + n, shifted);
                }
            }
        }
    }
    return r;
}

std::vector<Rat> apply_to_series(const OreOp& a, const std::vector<Rat>& coeffs, long K) {
    if (K < 0) throw std::invalid_argument("apply_to_series: negative truncation order");
    long min_shift = 0;
    for (const auto& [k, c] : a.terms)
        min_shift = std::min(min_shift, lp_min_exp(c, 0));
    long needed = K - 1 - min_shift;
    if (needed >= (long)coeffs.size())
        throw std::invalid_argument(
            "apply_to_series: truncation order requires " + std::to_string(needed + 1) +
            " series coefficients, got " + std::to_string(coeffs.size()));
    std::vector<Rat> out((size_t)K, Rat(0));
    for (const auto& [k, c] : a.terms) {
        for (const auto& [e, coeff] : c.terms) {
            long shift = e[0];
            for (long d = 0; d < K; ++d) {
                long j = d - shift;
                if (j < 0 || j >= (long)coeffs.size()) continue;
                out[(size_t)d] += coeff * rat_pow(Rat(j), k) * coeffs[(size_t)j];
            }
        }
    }
    return out;
}

std::optional<Rat> ore_proportional(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.terms.size() != b.terms.size()) return std::nullopt;
    // ratio fixed by the leading coefficients, then checked everywhere
    const auto& [ka, ca] = *a.terms.rbegin();
    const auto& [kb, cb] = *b.terms.rbegin();
    if (ka != kb || ca.terms.size() != cb.terms.size()) return std::nullopt;
    if (ca.terms.begin()->first != cb.terms.begin()->first) return std::nullopt;
    Rat ratio = ca.terms.begin()->second / cb.terms.begin()->second;
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it == b.terms.end()) return std::nullopt;
        if (!(c == ratio * it->second)) return std::nullopt;
    }
    return ratio;
}

Int stirling2(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> S(n + 1, std::vector<Int>(n + 1, Int(0)));
    S[0][0] = 1;
    for (unsigned long i = 1; i <= n; ++i)
        for (unsigned long j = 1; j <= i; ++j)
            S[i][j] = Int(j) * S[i - 1][j] + S[i - 1][j - 1];
    return S[n][k];
}

DerivativeForm to_derivative_form(const OreOp& a) {
    if (a.is_zero()) throw std::invalid_argument("to_derivative_form: zero operator");
    long n = a.order();
    if (a.terms.rbegin()->second.is_zero())
        throw std::invalid_argument("to_derivative_form: zero leading coefficient");
    // D^k = sum_i S(k,i) alpha^i d^i
    std::vector<LaurentPoly> p((size_t)n + 1, LaurentPoly(alpha_var()));
    for (const auto& [k, c] : a.terms)
        for (long i = 0; i <= k; ++i) {
            Int s2 = stirling2((unsigned long)k, (unsigned long)i);
            if (s2 == 0) continue;
            LaurentPoly piece = Rat(s2) * c;
            LaurentPoly shifted(alpha_var());
            for (const auto& [e, pc] : piece.terms) shifted.add_term({e[0] + i}, pc);
            p[(size_t)i] = p[(size_t)i] + shifted;
        }
    long min_e = 0;
    for (const auto& q : p)
        if (!q.is_zero()) min_e = std::min(min_e, lp_min_exp(q, 0));
    DerivativeForm f;
    for (auto& q : p) {
        UniPoly u;
        for (const auto& [e, c] : q.terms) {
            long deg = e[0] - min_e;
            if ((long)u.c.size() <= deg) u.c.resize((size_t)deg + 1, Rat(0));
            u.c[(size_t)deg] = c;
        }
        u.normalize();
        f.p.push_back(u);
    }
    return f;
}

std::string ore_str(const OreOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << lp_str(it->second) << ")";
        if (it->first > 0) {
            os << "*D";
            if (it->first > 1) os << "^" << it->first;
        }
    }
    return os.str();
}

std::string ore_json(const OreOp& a) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        if (!first) os << ",";
        first = false;
        os << "{\"D\":" << it->first << ",\"coeff\":" << lp_json(it->second) << "}";
    }
    os << "]";
    return os.str();
}

}  // namespace prymhg::ore
