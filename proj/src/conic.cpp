#include "prymhg/conic.hpp"

#include "prymhg/mpcx.hpp"

#include <algorithm>
#include <sstream>

namespace prymhg::conic {

static const std::vector<std::string> kChartVars = {"alpha", "u1", "u2"};

static LaurentPoly lp3_zero() { return LaurentPoly(kChartVars); }

QuadForm3 conic_chart(const gkz::ToricModel& model) {
    const LaurentPoly& f = model.f;
    if (f.arity() != 5)
        throw std::invalid_argument("conic_chart: model must have four torus variables");
    QuadForm3 q;
    for (auto& row : q.a)
        for (auto& x : row) x = lp3_zero();
    for (const auto& [e, c] : f.terms) {
        long e3 = e[3], e4 = e[4];
        if (e3 < 0 || e4 < 0 || e3 + e4 > 2)
            throw std::invalid_argument(
                "conic_chart: model is not fiberwise quadratic in its last two variables");
        std::vector<long> base = {e[0], e[1], e[2]};
        LaurentPoly t = lp_monomial(kChartVars, base, c);
        Rat half(1, 2);
        if (e3 == 0 && e4 == 0)
            q.a[0][0] = q.a[0][0] + t;
        else if (e3 == 1 && e4 == 0)
            q.a[0][1] = q.a[0][1] + half * t;
        else if (e3 == 0 && e4 == 1)
            q.a[0][2] = q.a[0][2] + half * t;
        else if (e3 == 2 && e4 == 0)
            q.a[1][1] = q.a[1][1] + t;
        else if (e3 == 1 && e4 == 1)
            q.a[1][2] = q.a[1][2] + half * t;
        else
            q.a[2][2] = q.a[2][2] + t;
    }
    q.a[1][0] = q.a[0][1];
    q.a[2][0] = q.a[0][2];
    q.a[2][1] = q.a[1][2];
    if (quad_det(q).is_zero())
        throw std::invalid_argument("conic_chart: chart determinant vanishes identically");
    return q;
}

LaurentPoly quad_det(const QuadForm3& q) {
    const auto& a = q.a;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

int quad_rank_at(const QuadForm3& q, const Rat& alpha, const Rat& u1, const Rat& u2) {
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[(size_t)i][(size_t)j] = lp_eval(q.a[(size_t)i][(size_t)j], {alpha, u1, u2});
    int rank = 0;
    for (int c = 0; c < 3 && rank < 3; ++c) {
        int piv = -1;
        for (int i = rank; i < 3; ++i)
            if (m[(size_t)i][(size_t)c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[(size_t)rank], m[(size_t)piv]);
        for (int i = 0; i < 3; ++i) {
            if (i == rank || m[(size_t)i][(size_t)c] == 0) continue;
            Rat f = m[(size_t)i][(size_t)c] / m[(size_t)rank][(size_t)c];
            for (int j = 0; j < 3; ++j) m[(size_t)i][(size_t)j] -= f * m[(size_t)rank][(size_t)j];
        }
        ++rank;
    }
    return rank;
}

using Mat3 = std::array<std::array<LaurentPoly, 3>, 3>;

static Mat3 mat3_identity() {
    Mat3 s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s[(size_t)i][(size_t)j] = i == j ? lp_const(kChartVars, Rat(1)) : lp3_zero();
    return s;
}

static Mat3 mat3_mul(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            LaurentPoly s = lp3_zero();
            for (int k = 0; k < 3; ++k) s = s + x[(size_t)i][(size_t)k] * y[(size_t)k][(size_t)j];
            r[(size_t)i][(size_t)j] = s;
        }
    return r;
}

static Mat3 mat3_transpose(const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[(size_t)i][(size_t)j] = x[(size_t)j][(size_t)i];
    return r;
}

static LaurentPoly unit_quotient(const LaurentPoly& num, const LaurentPoly& pivot,
                                 const char* where) {
    if (pivot.n_terms() != 1)
        throw std::invalid_argument(std::string(where) +
                                    ": pivot is not invertible in the Laurent ring: " +
                                    lp_str(pivot));
    return num * lp_pow(pivot, -1);
}

DiagResult diagonalize(const QuadForm3& q) {
    DiagResult r;
    r.subs = mat3_identity();
    Mat3 cur = q.a;
    auto offdiag_zero = [&](const Mat3& m) {
        return m[0][1].is_zero() && m[0][2].is_zero() && m[1][2].is_zero();
    };
    if (!cur[0][2].is_zero() || !cur[1][2].is_zero()) {
        Mat3 s = mat3_identity();
        s[2][0] = -unit_quotient(cur[0][2], cur[2][2], "diagonalize");
        s[2][1] = -unit_quotient(cur[1][2], cur[2][2], "diagonalize");
        cur = mat3_mul(mat3_transpose(s), mat3_mul(cur, s));
        r.subs = mat3_mul(r.subs, s);
    }
    if (!cur[0][1].is_zero()) {
        Mat3 s = mat3_identity();
        s[1][0] = -unit_quotient(cur[0][1], cur[1][1], "diagonalize");
        cur = mat3_mul(mat3_transpose(s), mat3_mul(cur, s));
        r.subs = mat3_mul(r.subs, s);
    }
    if (!offdiag_zero(cur)) throw std::runtime_error("diagonalize: residual off-diagonal entries");
    r.diag.a = cur;
    return r;
}

PlaneCurveModel discriminant(const QuadForm3& diag) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !diag.a[(size_t)i][(size_t)j].is_zero())
                throw std::invalid_argument("discriminant: form is not diagonal");
    LaurentPoly det = diag.a[0][0] * diag.a[1][1] * diag.a[2][2];
    if (det.is_zero()) throw std::invalid_argument("discriminant: determinant vanishes identically");
    PlaneCurveModel m;
    m.lattice_scale = {1, 1};
    LaurentPoly g = lp_make_primitive(lp_strip_monomial_content(det));
    if (g.n_terms() == 1) {
        m.f = lp_const(kChartVars, Rat(1));
        m.empty = true;
        return m;
    }
    // sign normalization: positive coefficient on the top u2-power
    long top = lp_max_exp(g, 2);
    for (auto it = g.terms.rbegin(); it != g.terms.rend(); ++it)
        if (it->first[2] == top) {
            if (it->second < 0) g = -g;
            break;
        }
    m.f = g;
    return m;
}

PlaneCurveModel double_cover(const QuadForm3& diag, const PlaneCurveModel& delta,
                             int minor_index) {
    if (minor_index != 1)
        throw std::invalid_argument("double_cover: only the (1,1)x(2,2) minor is supported");
    LaurentPoly minor = diag.a[1][1] * diag.a[2][2];
    if (minor.is_zero()) throw std::invalid_argument("double_cover: chosen minor vanishes identically");
    LaurentPoly s = -minor;  // the square of the cover coordinate
    if (s.n_terms() != 1)
        throw std::invalid_argument("double_cover: minor is not a monomial times a unit");
    const auto& [e, c] = *s.terms.begin();
    if (e[1] != 1 || (c != 1 && c != -1))
        throw std::invalid_argument("double_cover: minor does not solve for u1");
    // s = c alpha^p u1 u2^r, so on the cover u1 = (1/c) alpha^{-p} u2^{-r} t^2
    std::vector<LaurentPoly> images = {
        lp_var(kChartVars, 0), lp_monomial(kChartVars, {-e[0], 2, -e[2]}, c),
        lp_var(kChartVars, 2)};
    PlaneCurveModel m;
    m.f = laurent_substitute(delta.f, images);
    m.lattice_scale = {2 * delta.lattice_scale[0], delta.lattice_scale[1]};
    m.empty = delta.empty;
    return m;
}

WeightedCurve projective_closure(const PlaneCurveModel& c, const std::vector<long>& weights,
                                 const std::vector<std::string>& names) {
    if (weights.size() != 3 || names.size() != 3)
        throw std::invalid_argument("projective_closure: need three weights and names");
    WeightedCurve w;
    w.weights = weights;
    std::vector<std::string> vars = {"alpha", names[0], names[1], names[2]};
    long dmax = 0;
    for (const auto& [e, coeff] : c.f.terms) {
        if (e[1] < 0 || e[2] < 0)
            throw std::invalid_argument("projective_closure: model has poles along the axes");
        dmax = std::max(dmax, weights[1] * e[1] + weights[2] * e[2]);
    }
    w.F = LaurentPoly(vars);
    for (const auto& [e, coeff] : c.f.terms) {
        long deg = weights[1] * e[1] + weights[2] * e[2];
        if ((dmax - deg) % weights[0] != 0)
            throw std::invalid_argument("projective_closure: no common weighted degree reachable");
        w.F.add_term({e[0], (dmax - deg) / weights[0], e[1], e[2]}, coeff);
    }
    w.degree = dmax;
    return w;
}

long genus_from_polytope(const PlaneCurveModel& c) {
    lattice::PointConfig cfg;
    cfg.dim = 2;
    for (const auto& [e, coeff] : c.f.terms) cfg.points.push_back({e[1], e[2]});
    lattice::Polytope P;
    try {
        P = lattice::hull_and_facets(cfg);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("genus_from_polytope: degenerate Newton polygon");
    }
    return (long)lattice::lattice_points(P, 1, true).size();
}

FixedPointData involution_fixed_points(const WeightedCurve& w) {
    if (w.weights != std::vector<long>{1, 1, 3})
        throw std::invalid_argument("involution_fixed_points: expected weights (1,1,3)");
    FixedPointData out;
    // restriction to the fixed line x1 = 0, viewed in the chart x0 = 1
    std::map<long, LaurentPoly> py;  // y-degree -> coefficient in alpha
    std::vector<std::string> avar = {"alpha"};
    LaurentPoly at_010(avar), at_001(avar);
    for (const auto& [e, c] : w.F.terms) {
        if (e[2] == 0) {  // x1-exponent zero
            auto it = py.find(e[3]);
            if (it == py.end()) it = py.emplace(e[3], LaurentPoly(avar)).first;
            it->second.add_term({e[0]}, c);
            if (e[1] == 0) at_001.add_term({e[0]}, c);  // also x0 = 0
        }
        if (e[1] == 0 && e[3] == 0) at_010.add_term({e[0]}, c);  // x0 = y = 0
    }
    if (py.empty()) throw std::invalid_argument("involution_fixed_points: curve contains the fixed line");
    // distinct roots of the restricted form on the chart x0 = 1: generic count
    // is the y-degree, certified squarefree by a nonzero y-resultant
    long degy = py.rbegin()->first;
    {
        std::vector<std::string> vars2 = {"alpha", "y"};
        LaurentPoly p(vars2), dp(vars2);
        for (const auto& [d, coeff] : py)
            for (const auto& [e, c] : coeff.terms) {
                p.add_term({e[0], d}, c);
                if (d > 0) dp.add_term({e[0], d - 1}, Rat(d) * c);
            }
        LaurentPoly res = lp_resultant(p, dp, 1);
        if (res.is_zero())
            throw std::runtime_error("involution_fixed_points: restricted form is not squarefree");
    }
    out.count += degy;
    out.loci.push_back("x1 = 0, x0 = 1: " + std::to_string(degy) +
                       " simple roots of the restricted form in y");
    if (at_001.is_zero()) {
        out.count += 1;
        out.loci.push_back("(0:0:1) lies on the curve");
    }
    if (at_010.is_zero()) {
        out.count += 1;
        out.loci.push_back("(0:1:0), the weight-1 coordinate point fixed by the sign involution");
    }
    return out;
}

// ------------------------------------------------------------- resultants

static LaurentPoly lp_det_rec(std::vector<std::vector<LaurentPoly>>& m, std::vector<int>& cols,
                              int row) {
    int n = (int)m.size();
    if (row == n) {
        // should not happen; handled by base case below
        throw std::logic_error("determinant recursion overflow");
    }
    if ((int)cols.size() == 1) return m[(size_t)row][(size_t)cols[0]];
    LaurentPoly acc(m[0][0].vars);
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m[(size_t)row][(size_t)c].is_zero()) {
            std::vector<int> rest;
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            LaurentPoly sub = lp_det_rec(m, rest, row + 1);
            LaurentPoly term = m[(size_t)row][(size_t)c] * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

LaurentPoly lp_resultant(const LaurentPoly& f0, const LaurentPoly& g0, int var) {
    if (f0.is_zero() || g0.is_zero()) return LaurentPoly(f0.vars);
    LaurentPoly f = f0, g = g0;
    // clear the variable's monomial content (changes the resultant by a unit)
    auto clear_var = [&](LaurentPoly& h) {
        long mn = lp_min_exp(h, var);
        if (mn == 0) return;
        LaurentPoly sh(h.vars);
        for (const auto& [e, c] : h.terms) {
            auto ne = e;
            ne[(size_t)var] -= mn;
            sh.add_term(ne, c);
        }
        h = sh;
    };
    clear_var(f);
    clear_var(g);
    auto fc = lp_as_univariate(f, var);
    auto gc = lp_as_univariate(g, var);
    long df = fc.rbegin()->first, dg = gc.rbegin()->first;
    LaurentPoly zero(f.vars);
    auto coef = [&](const std::map<long, LaurentPoly>& m, long d) {
        auto it = m.find(d);
        return it == m.end() ? zero : it->second;
    };
    if (df == 0 && dg == 0) return lp_const(f.vars, Rat(1));
    if (df == 0) return lp_pow(coef(fc, 0), dg);
    if (dg == 0) return lp_pow(coef(gc, 0), df);
    long n = df + dg;
    std::vector<std::vector<LaurentPoly>> syl((size_t)n, std::vector<LaurentPoly>((size_t)n, zero));
    for (long i = 0; i < dg; ++i)
        for (long k = 0; k <= df; ++k) syl[(size_t)i][(size_t)(i + k)] = coef(fc, df - k);
    for (long i = 0; i < df; ++i)
        for (long k = 0; k <= dg; ++k) syl[(size_t)(dg + i)][(size_t)(i + k)] = coef(gc, dg - k);
    std::vector<int> cols((size_t)n);
    for (int i = 0; i < (int)n; ++i) cols[(size_t)i] = i;
    return lp_det_rec(syl, cols, 0);
}

// ------------------------------------------------------ smoothness

static UniPoly to_unipoly_1var(const LaurentPoly& f, long* stripped, bool strip = true) {
    // f must involve only variable 0 of its context
    long mn = strip ? lp_min_exp(f, 0) : 0;
    if (!strip && lp_min_exp(f, 0) < 0)
        throw std::logic_error("Laurent tail where a polynomial was expected");
    if (stripped) *stripped = mn;
    UniPoly u;
    for (const auto& [e, c] : f.terms) {
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] != 0) throw std::logic_error("polynomial is not univariate");
        long d = e[0] - mn;
        if ((long)u.c.size() <= d) u.c.resize((size_t)d + 1, Rat(0));
        u.c[(size_t)d] = c;
    }
    u.normalize();
    return u;
}

static std::vector<Rat> rational_roots(const UniPoly& p0) {
    // primitive integer rescale, then trial over divisors of the end coefficients
    UniPoly p = p0;
    if (p.is_zero()) return {};
    Int den = 1;
    for (const auto& c : p.c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    std::vector<Int> ic;
    for (const auto& c : p.c) ic.push_back(boost::multiprecision::numerator(c * Rat(den)));
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    std::vector<Rat> roots;
    if (low > 0) roots.push_back(Rat(0));
    Int a0 = boost::multiprecision::abs(ic[low]);
    Int an = boost::multiprecision::abs(ic.back());
    const Int limit = 1000000;
    if (a0 > limit * limit || an > limit * limit) return roots;  // callers treat missing roots conservatively
    auto divisors = [&](Int v) {
        std::vector<Int> ds;
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const Int& p_div : divisors(a0))
        for (const Int& q_div : divisors(an)) {
            for (int s = -1; s <= 1; s += 2) {
                Rat cand = Rat(s * p_div) / Rat(q_div);
                if (upoly_eval(p0, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// strip the rational roots off p; returns what remains after dividing out
// every (t - r) with r rational
static UniPoly remove_rational_roots(const UniPoly& p, std::vector<Rat>* roots_out) {
    UniPoly rem = p;
    auto roots = rational_roots(p);
    for (const Rat& r : roots) {
        UniPoly lin({-r, Rat(1)});
        for (;;) {
            auto [q, rr] = upoly_divmod(rem, lin);
            if (!rr.is_zero()) break;
            rem = q;
        }
    }
    if (roots_out) *roots_out = roots;
    return rem;
}

SmoothnessCert smoothness_certificate(const PlaneCurveModel& c, const Rat& alpha_sample) {
    if (alpha_sample == 0)
        throw std::invalid_argument("smoothness_certificate: alpha sample must be nonzero");
    SmoothnessCert cert;
    int ai = lp_var_index(c.f, "alpha");
    LaurentPoly f = ai >= 0 ? lp_specialize(c.f, ai, alpha_sample) : c.f;
    if (f.arity() != 2) throw std::invalid_argument("smoothness_certificate: need a plane model");

    bool eliminated = false;
    for (int attempt = 0; attempt < 2 && !eliminated; ++attempt) {
        int keep = attempt == 0 ? 0 : 1;  // variable kept after elimination
        int elim = 1 - keep;
        LaurentPoly g1 = lp_theta(f, 0), g2 = lp_theta(f, 1);
        LaurentPoly r1 = lp_resultant(f, g1, elim);
        LaurentPoly r2 = lp_resultant(f, g2, elim);
        if (r1.is_zero() || r2.is_zero()) continue;
        eliminated = true;
        // r_i only involve the kept variable; rotate it into slot 0
        auto univ = [&](const LaurentPoly& r) {
            LaurentPoly s(std::vector<std::string>{r.vars[(size_t)keep], r.vars[(size_t)elim]});
            for (const auto& [e, cc] : r.terms) s.add_term({e[(size_t)keep], e[(size_t)elim]}, cc);
            return to_unipoly_1var(s, nullptr);
        };
        UniPoly u1 = univ(r1), u2 = univ(r2);
        cert.resultant1 = upoly_str(u1, f.vars[(size_t)keep]);
        cert.resultant2 = upoly_str(u2, f.vars[(size_t)keep]);
        UniPoly g = upoly_gcd(u1, u2);
        cert.resolved = true;
        std::vector<Rat> candidates;
        if (!g.is_zero() && g.degree() > 0) {
            UniPoly rem = remove_rational_roots(g, &candidates);
            if (!rem.is_zero() && rem.degree() > 0) cert.resolved = false;
        }
        // back-substitution at every nonzero candidate value of the kept variable
        for (const Rat& a : candidates) {
            if (a == 0) continue;  // not on the torus
            UniPoly pf = to_unipoly_1var(lp_specialize(f, keep, a), nullptr);
            UniPoly p1 = to_unipoly_1var(lp_specialize(g1, keep, a), nullptr);
            UniPoly p2 = to_unipoly_1var(lp_specialize(g2, keep, a), nullptr);
            UniPoly common = upoly_gcd(upoly_gcd(pf, p1), p2);
            if (common.is_zero() || common.degree() == 0) continue;
            std::vector<Rat> bs;
            UniPoly rem = remove_rational_roots(common, &bs);
            if (!rem.is_zero() && rem.degree() > 0) cert.resolved = false;
            for (const Rat& b : bs) {
                Rat x1 = keep == 0 ? a : b, x2 = keep == 0 ? b : a;
                cert.singular_points.emplace_back(x1, x2);
            }
        }
    }
    if (!eliminated)
        throw std::runtime_error(
            "smoothness_certificate: resultant elimination degenerated in both orders");

    // axis scan for affine witnesses when the model is polynomial; the torus
    // verdict does not depend on these
    if (lp_min_exp(f, 0) >= 0 && lp_min_exp(f, 1) >= 0) {
        LaurentPoly d1 = lp_derivative(f, 0), d2 = lp_derivative(f, 1);
        for (int axis = 0; axis < 2; ++axis) {
            UniPoly pf = to_unipoly_1var(lp_specialize(f, axis, Rat(0)), nullptr, false);
            UniPoly p1 = to_unipoly_1var(lp_specialize(d1, axis, Rat(0)), nullptr, false);
            UniPoly p2 = to_unipoly_1var(lp_specialize(d2, axis, Rat(0)), nullptr, false);
            UniPoly common = upoly_gcd(upoly_gcd(pf, p1), p2);
            if (common.is_zero()) continue;  // whole axis singular; not our cases
            for (const Rat& b : rational_roots(common)) {
                Rat x1 = axis == 0 ? Rat(0) : b, x2 = axis == 0 ? b : Rat(0);
                if (std::find(cert.singular_points.begin(), cert.singular_points.end(),
                              std::make_pair(x1, x2)) == cert.singular_points.end())
                    cert.singular_points.emplace_back(x1, x2);
            }
        }
    }
    bool torus_witness = false;
    for (const auto& [x1, x2] : cert.singular_points)
        if (x1 != 0 && x2 != 0) torus_witness = true;
    cert.torus_smooth = cert.resolved && !torus_witness;
    return cert;
}

// ------------------------------------------------- critical fiber witness

using mp::Cx;
using mp::Real;

static Cx cx_exp(const Cx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

CriticalCert critical_alpha_certificate(const gkz::ToricModel& model, unsigned bits) {
    mp::set_precision_bits(bits);
    CriticalCert cert;
    // the family degenerates where the monomial values are proportional to
    // gamma; eliminating the scale leaves -alpha = prod gamma_i^{gamma_i},
    // whose sign depends on the parity of the negative weight
    long neg_weight = 0;
    for (long e : model.gamma.entries)
        if (e < 0) neg_weight -= e;
    Rat w_c = hypergeom::singular_value(model.gamma);
    if (neg_weight % 2 != 0) w_c = -w_c;  // w_c = prod gamma^gamma
    cert.alpha_sing = -w_c;

    long N = (long)model.gamma.entries.size();
    long d = model.monomials.dim;
    const Real pi = acos(Real(-1));
    // L = log(-alpha_sing) = log(w_c)
    Cx L{log(mp::real_from_rat(w_c < 0 ? Rat(-w_c) : w_c)), w_c < 0 ? pi : Real(0)};

    // seed from the log-linearized system  k_i L + m_i . x = log(gamma_i) + mu
    long nu = d + 1;  // unknowns x_1..x_d, mu
    std::vector<Cx> rhs((size_t)N);
    std::vector<std::vector<Cx>> A((size_t)N, std::vector<Cx>((size_t)nu));
    for (long i = 0; i < N; ++i) {
        long gi = model.gamma.entries[(size_t)i];
        Real lg = log(Real(gi > 0 ? gi : -gi));
        rhs[(size_t)i] = Cx{lg, gi < 0 ? pi : Real(0)} - Cx(Real(model.kexp[(size_t)i])) * L;
        for (long j = 0; j < d; ++j)
            A[(size_t)i][(size_t)j] = Cx(Real(model.monomials.points[(size_t)i][(size_t)j]));
        A[(size_t)i][(size_t)d] = Cx(Real(1));
    }
    {
        // pairing the equations with gamma eliminates the unknowns, leaving a
        // 2 pi i multiple; repair the branches along the Bezout exponents so
        // the linear system becomes exactly consistent
        Cx s;
        for (long i = 0; i < N; ++i)
            s = s + Cx(Real(model.gamma.entries[(size_t)i])) * rhs[(size_t)i];
        Real nu_real = s.im / (2 * pi);
        long nu_int = (long)llround(nu_real.convert_to<double>());
        for (long i = 0; i < N; ++i)
            rhs[(size_t)i] =
                rhs[(size_t)i] -
                Cx(Real(0), 2 * pi * Real(nu_int) * Real(model.kexp[(size_t)i]));
    }
    auto solve_normal = [&](const std::vector<std::vector<Cx>>& J, const std::vector<Cx>& r) {
        mp::CMat G((long)nu);
        std::vector<Cx> b((size_t)nu);
        for (long p = 0; p < nu; ++p) {
            for (long q = 0; q < nu; ++q) {
                Cx s;
                for (long i = 0; i < (long)J.size(); ++i)
                    s = s + mp::conj(J[(size_t)i][(size_t)p]) * J[(size_t)i][(size_t)q];
                G.at(p, q) = s;
            }
            Cx s;
            for (long i = 0; i < (long)J.size(); ++i)
                s = s + mp::conj(J[(size_t)i][(size_t)p]) * r[(size_t)i];
            b[(size_t)p] = s;
        }
        mp::CMat Gi = mp::cmat_inverse(G);
        std::vector<Cx> x((size_t)nu);
        for (long p = 0; p < nu; ++p) {
            Cx s;
            for (long q = 0; q < nu; ++q) s = s + Gi.at(p, q) * b[(size_t)q];
            x[(size_t)p] = s;
        }
        return x;
    };
    std::vector<Cx> z = solve_normal(A, rhs);

    // damped Gauss-Newton on  E_i = exp(k_i L + m_i . x) - gamma_i e^mu
    auto eval_terms = [&](const std::vector<Cx>& zz) {
        std::vector<Cx> t((size_t)N);
        for (long i = 0; i < N; ++i) {
            Cx e = Cx(Real(model.kexp[(size_t)i])) * L;
            for (long j = 0; j < d; ++j)
                e = e + Cx(Real(model.monomials.points[(size_t)i][(size_t)j])) * zz[(size_t)j];
            t[(size_t)i] = cx_exp(e);
        }
        return t;
    };
    auto resid = [&](const std::vector<Cx>& zz) {
        std::vector<Cx> t = eval_terms(zz);
        Cx lam = cx_exp(zz[(size_t)d]);
        std::vector<Cx> E((size_t)N);
        for (long i = 0; i < N; ++i)
            E[(size_t)i] = t[(size_t)i] - Cx(Real(model.gamma.entries[(size_t)i])) * lam;
        return E;
    };
    auto norm_of = [&](const std::vector<Cx>& v) -> Real {
        Real s = 0;
        for (const auto& x : v) s += mp::norm2(x);
        return Real(sqrt(s));
    };

    Real target = pow(Real(2), -(long)(bits / 2) - 16);
    bool converged = false;
    std::vector<Cx> E = resid(z);
    for (int iter = 0; iter < 200; ++iter) {
        if (norm_of(E) < target) {
            converged = true;
            break;
        }
        std::vector<Cx> t = eval_terms(z);
        Cx lam = cx_exp(z[(size_t)d]);
        std::vector<std::vector<Cx>> J((size_t)N, std::vector<Cx>((size_t)nu));
        for (long i = 0; i < N; ++i) {
            for (long j = 0; j < d; ++j)
                J[(size_t)i][(size_t)j] =
                    Cx(Real(model.monomials.points[(size_t)i][(size_t)j])) * t[(size_t)i];
            J[(size_t)i][(size_t)d] = -Cx(Real(model.gamma.entries[(size_t)i])) * lam;
        }
        std::vector<Cx> Eneg((size_t)N);
        for (long i = 0; i < N; ++i) Eneg[(size_t)i] = -E[(size_t)i];
        std::vector<Cx> step = solve_normal(J, Eneg);
        Real damp = 1;
        for (int h = 0; h < 30; ++h) {
            std::vector<Cx> zn = z;
            for (long j = 0; j < nu; ++j)
                zn[(size_t)j] = zn[(size_t)j] + Cx(damp) * step[(size_t)j];
            std::vector<Cx> En = resid(zn);
            if (norm_of(En) < norm_of(E)) {
                z = zn;
                E = En;
                break;
            }
            damp /= 2;
            if (h == 29) iter = 200;  // stalled
        }
    }
    if (norm_of(E) < target) converged = true;
    cert.converged = converged;

    // residual of (f, u grad f) at the witness
    std::vector<Cx> t = eval_terms(z);
    Real rmax = 0;
    {
        Cx fsum;
        for (long i = 0; i < N; ++i) fsum = fsum + t[(size_t)i];
        Real v = mp::abs(fsum);
        if (v > rmax) rmax = v;
        for (long j = 0; j < d; ++j) {
            Cx s;
            for (long i = 0; i < N; ++i)
                s = s + Cx(Real(model.monomials.points[(size_t)i][(size_t)j])) * t[(size_t)i];
            v = mp::abs(s);
            if (v > rmax) rmax = v;
        }
    }
    cert.residual = rmax.str(20);
    Real dev = 0;
    {
        Cx ref = t[0] / Cx(Real(model.gamma.entries[0]));
        for (long i = 1; i < N; ++i) {
            Cx ratio = t[(size_t)i] / Cx(Real(model.gamma.entries[(size_t)i]));
            Real v = mp::abs(ratio - ref) / mp::abs(ref);
            if (v > dev) dev = v;
        }
    }
    cert.proportionality = dev.str(20);
    for (long j = 0; j < d; ++j) cert.witness.push_back(mp::cx_str(cx_exp(z[(size_t)j]), 24));
    return cert;
}

}  // namespace prymhg::conic
