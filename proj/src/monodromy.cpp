#include "prymhg/monodromy.hpp"

#include <algorithm>
#include <sstream>

namespace prymhg::monodromy {

using mp::CMat;
using mp::Cx;
using mp::Real;

NumericOde ode_from_operator(const ore::OreOp& op, const Rat& alpha0) {
    ore::DerivativeForm df = ore::to_derivative_form(op);
    NumericOde ode;
    ode.order = df.order();
    // p_i(alpha) with alpha = alpha0 * beta and the overall scale alpha0^order
    // cleared: coefficient of beta^d picks up alpha0^(d - i + order)
    for (long i = 0; i <= ode.order; ++i) {
        const UniPoly& q = df.p[(size_t)i];
        std::vector<Cx> row;
        for (size_t d = 0; d < q.c.size(); ++d)
            row.push_back(mp::cx_from_rat(q.c[d] * rat_pow(alpha0, (long)d - i + ode.order)));
        ode.p.push_back(row);
    }
    return ode;
}

static Real clearance(const Cx& z) {
    Real d0 = mp::abs(z);
    Real d1 = mp::abs(z - Cx(Real(1)));
    return d0 < d1 ? d0 : d1;
}

CMat taylor_step(const NumericOde& ode, const Cx& center, const Cx& h, const CMat& jets,
                 const Real& tol, const Rat& step_safety) {
    long n = ode.order;
    if (jets.n != n) throw std::invalid_argument("taylor_step: jet matrix size mismatch");
    Real safety = mp::real_from_rat(step_safety);
    Real rho = clearance(center);
    Real hlen = mp::abs(h);
    if (!(hlen < safety * rho))
        throw std::runtime_error("taylor_step: step of size " + hlen.str(6) +
                                 " violates the singularity clearance " + rho.str(6));

    // local polynomials P_i(t) = p_i(center + t)
    long degmax = 0;
    std::vector<std::vector<Cx>> P((size_t)n + 1);
    for (long i = 0; i <= n; ++i) {
        std::vector<Cx> sh = ode.p[(size_t)i];
        // repeated synthetic division by (t - center) accumulates the shift
        for (size_t round = 0; round + 1 < sh.size(); ++round)
            for (size_t k = sh.size() - 1; k > round; --k)
                sh[k - 1] = sh[k - 1] + center * sh[k];
        P[(size_t)i] = sh;
        if (!sh.empty()) degmax = std::max(degmax, (long)sh.size() - 1);
    }
    if (P[(size_t)n].empty()) throw std::runtime_error("taylor_step: vanishing leading coefficient");

    const long m_max = 20000;
    const int quiet_needed = 12;
    std::vector<std::vector<Cx>> a((size_t)n, std::vector<Cx>());  // per column
    for (long c = 0; c < n; ++c) {
        a[(size_t)c].reserve(256);
        for (long m = 0; m < n; ++m) a[(size_t)c].push_back(jets.at(m, c));
    }
    Real hpow = 1;
    Real scale = 0;
    for (long m = 0; m < n; ++m) {  // seed the magnitude scale from the jets
        for (long c = 0; c < n; ++c) {
            Real v = mp::abs(a[(size_t)c][(size_t)m]) * hpow;
            if (v > scale) scale = v;
        }
        hpow *= hlen;
    }
    if (scale == 0) scale = 1;  // zero initial data transports to zero
    int quiet = 0;
    long mstop = -1;
    for (long m = 0; m + n <= m_max; ++m) {
        // weights W_k for the coefficient of t^m: W_k = sum_i P_{i, i-k+m} ff(k,i)
        long klo = std::max(0L, m - degmax);
        long khi = m + n;
        std::vector<Cx> W((size_t)(khi - klo + 1));
        for (long k = klo; k <= khi; ++k) {
            Cx w;
            Real ff = 1;  // falling factorial k(k-1)...(k-i+1), updated per i
            for (long i = 0; i <= n; ++i) {
                if (i > 0) {
                    if (k - i + 1 < 0) break;
                    ff *= Real(k - i + 1);
                    if (ff == 0) break;
                }
                long d = i - k + m;
                if (d >= 0 && d < (long)P[(size_t)i].size())
                    w = w + P[(size_t)i][(size_t)d] * Cx(ff);
            }
            W[(size_t)(k - klo)] = w;
        }
        const Cx& lead = W[(size_t)(khi - klo)];
        if (lead.re == 0 && lead.im == 0)
            throw std::runtime_error("taylor_step: recurrence leading weight vanished");
        Real anorm = 0;
        for (long c = 0; c < n; ++c) {
            Cx s;
            const auto& ac = a[(size_t)c];
            for (long k = klo; k < khi; ++k) {
                if (k >= (long)ac.size()) break;
                const Cx& w = W[(size_t)(k - klo)];
                if (w.re == 0 && w.im == 0) continue;
                s = s + w * ac[(size_t)k];
            }
            Cx next = -s / lead;
            a[(size_t)c].push_back(next);
            Real v = mp::abs(next);
            if (v > anorm) anorm = v;
        }
        Real contrib = anorm * hpow;
        hpow *= hlen;
        if (contrib > scale) scale = contrib;
        if (scale > 0 && contrib < tol * scale) {
            if (++quiet >= quiet_needed && m >= 2 * n) {
                mstop = m + n;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if (mstop < 0)
        throw std::runtime_error("taylor_step: series did not settle within the term budget");

    CMat out(n);
    for (long c = 0; c < n; ++c) {
        const auto& ac = a[(size_t)c];
        for (long j = 0; j < n; ++j) {
            // b_j = sum_m C(m,j) a_m h^{m-j}
            Cx sum;
            Real binom = 1;  // C(j,j)
            Cx hp = Cx(Real(1));
            for (long m = j; m < (long)ac.size(); ++m) {
                if (m > j) {
                    binom = binom * Real(m) / Real(m - j);
                    hp = hp * h;
                }
                sum = sum + Cx(binom) * ac[(size_t)m] * hp;
            }
            out.at(j, c) = sum;
        }
    }
    return out;
}

// transport along a polygon, subdividing edges to honor the safety clearance
static CMat transport_polygon(const NumericOde& ode, const std::vector<Cx>& vertices,
                              const CMat& start, const Real& tol, const Rat& step_safety) {
    CMat J = start;
    Real frac = mp::real_from_rat(step_safety) * Real(9) / Real(10);
    for (size_t v = 0; v + 1 < vertices.size(); ++v) {
        Cx pos = vertices[v];
        const Cx& target = vertices[v + 1];
        for (int guard = 0; guard < 4096; ++guard) {
            Cx rem = target - pos;
            Real rlen = mp::abs(rem);
            if (rlen == 0) break;
            Real maxstep = frac * clearance(pos);
            Cx h = rem;
            bool last = true;
            if (rlen > maxstep) {
                h = rem * Cx(maxstep / rlen);
                last = false;
            }
            J = taylor_step(ode, pos, h, J, tol, step_safety);
            pos = pos + h;
            if (last) break;
        }
    }
    return J;
}

static std::vector<Cx> circle_vertices(const Cx& centre, const Real& radius, const Real& theta0,
                                       const Real& theta1, long segments) {
    std::vector<Cx> v;
    for (long k = 0; k <= segments; ++k) {
        Real t = theta0 + (theta1 - theta0) * Real(k) / Real(segments);
        v.push_back(centre + Cx(radius) * mp::cx_exp_i(t));
    }
    return v;
}

static std::vector<Cx> charpoly_of_inverse(const CMat& M) {
    return mp::charpoly(mp::cmat_inverse(M));
}

static double residual_vs(const std::vector<Cx>& coeffs, const UniPoly& expect) {
    Real worst = 0;
    long n = (long)coeffs.size() - 1;
    for (long k = 0; k <= n; ++k) {
        Real e = k < (long)expect.c.size() ? mp::real_from_rat(expect.c[(size_t)k]) : Real(0);
        Real d = mp::abs(coeffs[(size_t)k] - Cx(e));
        if (d > worst) worst = d;
    }
    return worst.convert_to<double>();
}

MonodromyReport monodromy_run(const hypergeom::GammaList& g, const ContinuationConfig& cfg) {
    mp::set_precision_bits(cfg.precision_bits);
    hypergeom::ExponentData ed = hypergeom::reduced_exponents(g);
    ore::OreOp H = hypergeom::build_irreducible_operator(g);
    NumericOde ode = ode_from_operator(H, ed.alpha0);
    long n = ode.order;

    MonodromyReport rep;
    rep.order = n;
    rep.bits = cfg.precision_bits;
    rep.tolerance = rat_str(cfg.tolerance);

    if (cfg.precision_bits < 64)
        throw std::invalid_argument("monodromy_run: precision must be at least 64 bits");
    if (!(cfg.step_safety > 0 && cfg.step_safety < 1))
        throw std::invalid_argument("monodromy_run: step safety must lie in (0,1)");
    Real tol = mp::real_from_rat(cfg.tolerance);
    Real series_tol = pow(Real(2), -(long)cfg.precision_bits + 16);
    if (series_tol > tol / 1000) series_tol = tol / 1000;
    Real b = mp::real_from_rat(cfg.base_point);
    if (!(b > 0 && b < 1))
        throw std::invalid_argument("monodromy_run: base point must lie between the singular points");
    const Real pi = acos(Real(-1));
    long nseg = std::max(cfg.min_segments, 16L);

    // jet basis change between plain Taylor jets and (y, Dy, ..., D^{n-1}y)
    CMat C(n);
    for (long m = 0; m < n; ++m)
        for (long i = 0; i <= m; ++i) {
            Rat s2 = Rat(ore::stirling2((unsigned long)m, (unsigned long)i)) *
                     rat_pow(cfg.base_point, i) * Rat(factorial((unsigned long)i));
            C.at(m, i) = mp::cx_from_rat(s2);
        }
    CMat Cinv = mp::cmat_inverse(C);

    auto to_dbasis = [&](const CMat& Ma) { return C * Ma * Cinv; };

    // counterclockwise polygonal circles through the base point; the loop
    // radii keep both singular points outside, and vertices are spaced
    // uniformly in the annulus angle
    CMat eye = CMat::identity(n);
    Real r0 = b, r1 = Real(1) - b;
    CMat M0a = transport_polygon(ode, circle_vertices(Cx(Real(0)), r0, Real(0), 2 * pi, nseg), eye,
                                 series_tol, cfg.step_safety);
    CMat Ma0a = transport_polygon(ode, circle_vertices(Cx(Real(1)), r1, pi, 3 * pi, nseg), eye,
                                  series_tol, cfg.step_safety);
    CMat M0 = to_dbasis(M0a);
    CMat Ma0 = to_dbasis(Ma0a);

    auto matrix_strings = [](const CMat& M) {
        std::vector<std::vector<std::pair<std::string, std::string>>> out;
        for (long i = 0; i < M.n; ++i) {
            std::vector<std::pair<std::string, std::string>> row;
            for (long j = 0; j < M.n; ++j)
                row.emplace_back(M.at(i, j).re.str(30), M.at(i, j).im.str(30));
            out.push_back(row);
        }
        return out;
    };
    rep.M0 = matrix_strings(M0);
    rep.Ma0 = matrix_strings(Ma0);

    UniPoly q0 = hypergeom::charpoly_from_exponents(ed.exps0);
    UniPoly qinf = hypergeom::charpoly_from_exponents(ed.expsInf);
    rep.charpoly_residual_0 = residual_vs(charpoly_of_inverse(M0), q0);
    rep.charpoly_residual_inf = residual_vs(charpoly_of_inverse(Ma0 * M0), qinf);

    {
        // local determinants against the exponent sums; the accessory point's
        // sum comes from the residue balance n(n-1)/2 - sum0 - sumInf
        Rat sum0 = 0, sumInf = 0;
        for (const Rat& x : ed.exps0) sum0 += x;
        for (const Rat& x : ed.expsInf) sumInf += x;
        Rat sumA0 = Rat(n * (n - 1)) / 2 - sum0 - sumInf;
        auto det_of = [&](const CMat& M) {
            std::vector<Cx> cp = mp::charpoly(M);
            Cx d = cp[0];
            if (M.n % 2 != 0) d = -d;
            return d;
        };
        auto unit_phase = [&](const Rat& s) {
            Real ang = 2 * pi * mp::real_from_rat(s);
            return mp::cx_exp_i(ang);
        };
        rep.det_residual_0 = mp::abs(det_of(M0) - unit_phase(sum0)).convert_to<double>();
        rep.det_residual_a0 = mp::abs(det_of(Ma0) - unit_phase(sumA0)).convert_to<double>();
    }

    {
        std::vector<Real> sv = mp::singular_values(Ma0 - CMat::identity(n));
        Real thr = Real("1e-6");
        long rank = 0;
        for (const Real& s : sv)
            if (s > thr) ++rank;
        rep.reflection_rank = rank;
    }

    if (cfg.with_product_loop) {
        // a single loop around both finite singular points, planned in the
        // annulus coordinate: half turn at |beta| = b, walk out along the
        // negative axis, full turn at |beta| = R, walk back, half turn back
        Real R = 1 + 2 * mp::real_from_rat(cfg.loop_radius_factor);
        std::vector<Cx> path = circle_vertices(Cx(Real(0)), r0, Real(0), pi, nseg / 2);
        std::vector<Cx> out_leg;
        long m = 6;
        for (long k = 1; k <= m; ++k) {
            Real rr = r0 * pow(R / r0, Real(k) / Real(m));
            out_leg.push_back(Cx(-rr, Real(0)));
        }
        path.insert(path.end(), out_leg.begin(), out_leg.end());
        auto big = circle_vertices(Cx(Real(0)), R, pi, 3 * pi, nseg);
        path.insert(path.end(), big.begin() + 1, big.end());
        for (long k = m - 1; k >= 1; --k) path.push_back(out_leg[(size_t)(k - 1)]);
        auto back = circle_vertices(Cx(Real(0)), r0, pi, Real(0), nseg / 2);
        path.insert(path.end(), back.begin(), back.end());
        CMat Mbig = to_dbasis(transport_polygon(ode, path, eye, series_tol, cfg.step_safety));
        Real e1 = mp::cmat_max_norm(Mbig - Ma0 * M0);
        Real e2 = mp::cmat_max_norm(Mbig - M0 * Ma0);
        if (e1 <= e2) {
            rep.product_residual = e1.convert_to<double>();
            rep.product_convention = "loop around both points = Ma0 * M0";
        } else {
            rep.product_residual = e2.convert_to<double>();
            rep.product_convention = "loop around both points = M0 * Ma0";
        }
    }
    return rep;
}

static std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific;
    os.precision(3);
    os << x;
    return os.str();
}

CertifyResult certify(const MonodromyReport& r, const ContinuationConfig& cfg) {
    CertifyResult out;
    double tol = mp::real_from_rat(cfg.tolerance).convert_to<double>();
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.items.push_back({name, pass, detail});
    };
    add("charpoly at 0", r.charpoly_residual_0 < tol, "residual " + sci(r.charpoly_residual_0));
    add("charpoly at infinity", r.charpoly_residual_inf < tol,
        "residual " + sci(r.charpoly_residual_inf));
    add("reflection rank", r.reflection_rank == 1,
        "rank(Ma0 - I) = " + std::to_string(r.reflection_rank));
    if (r.product_residual >= 0)
        add("loop product", r.product_residual < tol,
            "residual " + sci(r.product_residual) + " (" + r.product_convention + ")");
    out.all_pass = true;
    for (const auto& item : out.items) out.all_pass = out.all_pass && item.pass;
    return out;
}

std::string report_json(const MonodromyReport& r, const CertifyResult& c) {
    std::ostringstream os;
    auto mat = [&](const std::vector<std::vector<std::pair<std::string, std::string>>>& M) {
        std::ostringstream ms;
        ms << "[";
        for (size_t i = 0; i < M.size(); ++i) {
            ms << (i ? "," : "") << "[";
            for (size_t j = 0; j < M[i].size(); ++j)
                ms << (j ? "," : "") << "[\"" << M[i][j].first << "\",\"" << M[i][j].second
                   << "\"]";
            ms << "]";
        }
        ms << "]";
        return ms.str();
    };
    os << "{\"order\":" << r.order << ",\"bits\":" << r.bits << ",\"tolerance\":\"" << r.tolerance
       << "\",\"charpoly_residual_0\":" << r.charpoly_residual_0
       << ",\"charpoly_residual_inf\":" << r.charpoly_residual_inf
       << ",\"det_residual_0\":" << r.det_residual_0 << ",\"det_residual_a0\":" << r.det_residual_a0
       << ",\"reflection_rank\":" << r.reflection_rank
       << ",\"product_residual\":" << r.product_residual << ",\"product_convention\":\""
       << r.product_convention << "\",\"M0\":" << mat(r.M0) << ",\"Ma0\":" << mat(r.Ma0)
       << ",\"checks\":[";
    for (size_t i = 0; i < c.items.size(); ++i)
        os << (i ? "," : "") << "{\"name\":\"" << c.items[i].name << "\",\"status\":\""
           << (c.items[i].pass ? "pass" : "fail") << "\",\"detail\":\"" << c.items[i].detail
           << "\"}";
    os << "],\"all_pass\":" << (c.all_pass ? "true" : "false") << "}";
    return os.str();
}

}  // namespace prymhg::monodromy
