#include "prymhg/gkz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prymhg::gkz {

using lattice::IntMatrix;
using lattice::PointConfig;

static std::vector<std::string> model_vars(long d) {
    std::vector<std::string> v = {"alpha"};
    for (long i = 1; i <= d; ++i) v.push_back("u" + std::to_string(i));
    return v;
}

ToricModel make_model(const hypergeom::GammaList& g,
                      const std::vector<std::vector<long>>& monomials,
                      const std::vector<long>& kexp) {
    hypergeom::validate_gamma(g);
    size_t N = g.entries.size();
    if (monomials.size() != N || kexp.size() != N)
        throw std::invalid_argument("make_model: one monomial and one twist exponent per gamma entry");
    long d = (long)monomials[0].size();
    long ksum = 0;
    for (size_t i = 0; i < N; ++i) ksum += kexp[i] * g.entries[i];
    if (ksum != 1) throw std::invalid_argument("make_model: twist exponents must pair to 1 with gamma");
    for (long j = 0; j < d; ++j) {
        long s = 0;
        for (size_t i = 0; i < N; ++i) s += g.entries[i] * monomials[i][(size_t)j];
        if (s != 0) throw std::invalid_argument("make_model: monomials do not satisfy the gamma relation");
    }
    ToricModel m;
    m.gamma = g;
    m.monomials.dim = d;
    m.monomials.points = monomials;
    m.monomials.labels = std::vector<long>(g.entries.begin(), g.entries.end());
    m.kexp = kexp;
    m.f = LaurentPoly(model_vars(d));
    for (size_t i = 0; i < N; ++i) {
        std::vector<long> e(1 + (size_t)d, 0);
        e[0] = kexp[i];
        for (long j = 0; j < d; ++j) e[(size_t)(1 + j)] = monomials[i][(size_t)j];
        Rat c = (kexp[i] % 2 == 0) ? Rat(1) : Rat(-1);  // (-alpha)^k = (-1)^k alpha^k
        m.f.add_term(e, c);
    }
    return m;
}

// integer solution x of K x = rhs for a saturated full-column-rank K
static std::vector<Int> solve_integral(const IntMatrix& K, const std::vector<Int>& rhs) {
    size_t rows = (size_t)K.rows, cols = (size_t)K.cols;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = Rat(K.at((long)i, (long)j));
        m[i][cols] = Rat(rhs[i]);
    }
    // gaussian elimination, then read the unique solution
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    std::vector<Int> x(cols);
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = 0;
        while (lead < cols && m[i][lead] == 0) ++lead;
        if (lead == cols) {
            if (m[i][cols] != 0) throw std::logic_error("solve_integral: inconsistent system");
            continue;
        }
        Rat v = m[i][cols] / m[i][lead];
        if (boost::multiprecision::denominator(v) != 1)
            throw std::logic_error("solve_integral: non-integral solution");
        x[lead] = boost::multiprecision::numerator(v);
    }
    return x;
}

// unimodular completion: rows of the result are a Z-basis with first row = x
static IntMatrix complete_to_unimodular(const std::vector<Int>& x) {
    long n = (long)x.size();
    IntMatrix row(1, n);
    for (long j = 0; j < n; ++j) row.at(0, j) = x[(size_t)j];
    lattice::SmithResult s = lattice::smith_normal_form(row);
    if (s.D.at(0, 0) != 1)
        throw std::invalid_argument("complete_to_unimodular: vector is not primitive");
    // x V = +-e1^T, so the inverse of V has first row +-x
    // invert V by rational elimination (V unimodular, result integral)
    IntMatrix Vinv(n, n);
    {
        std::vector<std::vector<Rat>> aug((size_t)n, std::vector<Rat>((size_t)(2 * n), Rat(0)));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) aug[(size_t)i][(size_t)j] = Rat(s.V.at(i, j));
            aug[(size_t)i][(size_t)(n + i)] = 1;
        }
        for (long c = 0; c < n; ++c) {
            long piv = c;
            while (aug[(size_t)piv][(size_t)c] == 0) ++piv;
            std::swap(aug[(size_t)c], aug[(size_t)piv]);
            Rat pv = aug[(size_t)c][(size_t)c];
            for (long j = 0; j < 2 * n; ++j) aug[(size_t)c][(size_t)j] /= pv;
            for (long i = 0; i < n; ++i) {
                if (i == c || aug[(size_t)i][(size_t)c] == 0) continue;
                Rat f = aug[(size_t)i][(size_t)c];
                for (long j = 0; j < 2 * n; ++j)
                    aug[(size_t)i][(size_t)j] -= f * aug[(size_t)c][(size_t)j];
            }
        }
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                Rat v = aug[(size_t)i][(size_t)(n + j)];
                if (boost::multiprecision::denominator(v) != 1)
                    throw std::logic_error("unimodular inverse is not integral");
                Vinv.at(i, j) = boost::multiprecision::numerator(v);
            }
    }
    bool flip = false;
    for (long j = 0; j < n; ++j)
        if (Vinv.at(0, j) != x[(size_t)j]) flip = true;
    if (flip) {
        for (long j = 0; j < n; ++j) {
            if (Vinv.at(0, j) != -x[(size_t)j])
                throw std::logic_error("unimodular completion failed");
        }
        for (long j = 0; j < n; ++j) Vinv.at(0, j) = -Vinv.at(0, j);
    }
    return Vinv;
}

ToricModel realize_monomials(const hypergeom::GammaList& g) {
    hypergeom::validate_gamma(g);
    long N = (long)g.entries.size();
    {
        Int gg = 0;
        for (long e : g.entries) gg = boost::multiprecision::gcd(gg, Int(e < 0 ? -e : e));
        if (gg != 1) throw std::invalid_argument("realize_monomials: gamma list is not primitive");
    }
    IntMatrix grow(1, N);
    for (long j = 0; j < N; ++j) grow.at(0, j) = g.entries[(size_t)j];
    IntMatrix K = lattice::integer_kernel(grow);  // N x (N-1)
    if (K.cols != N - 1) throw std::logic_error("gamma kernel has unexpected rank");

    // coordinates of the all-ones vector inside the kernel basis
    std::vector<Int> ones((size_t)N, Int(1));
    std::vector<Int> x = solve_integral(K, ones);
    IntMatrix W = complete_to_unimodular(x);  // (N-1)x(N-1), first row = x

    // new basis rows of the kernel lattice; first row becomes all-ones
    IntMatrix R = W * lattice::transpose(K);  // (N-1) x N
    for (long j = 0; j < N; ++j)
        if (R.at(0, j) != 1) throw std::logic_error("basis change did not produce the ones row");

    IntMatrix M0(N - 2, N);
    for (long i = 0; i < N - 2; ++i)
        for (long j = 0; j < N; ++j) M0.at(i, j) = R.at(i + 1, j);
    // canonical shape: Hermite form of the row span, then translate each row
    // so its minimum entry is zero (absorbed by the ones row)
    IntMatrix H = lattice::hermite_row_basis(M0);
    if (H.rows != N - 2) throw std::logic_error("monomial rows lost rank in Hermite reduction");
    for (long i = 0; i < H.rows; ++i) {
        Int mn = H.at(i, 0);
        for (long j = 1; j < N; ++j) mn = std::min(mn, H.at(i, j));
        for (long j = 0; j < N; ++j) H.at(i, j) -= mn;
    }

    std::vector<std::vector<long>> mono((size_t)N, std::vector<long>((size_t)(N - 2)));
    for (long j = 0; j < N; ++j)
        for (long i = 0; i < N - 2; ++i) mono[(size_t)j][(size_t)i] = (long)H.at(i, j);

    // Bezout twist exponents: sum k_i gamma_i = 1
    std::vector<long> kexp((size_t)N, 0L);
    {
        long acc = g.entries[0];
        kexp[0] = 1;
        for (long i = 1; i < N && (acc != 1 && acc != -1); ++i) {
            long b = g.entries[(size_t)i];
            // extended gcd of acc and b
            long old_r = acc, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                long q = old_r / r;
                std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
                std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
                std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
            }
            for (long j = 0; j < i; ++j) kexp[(size_t)j] *= old_s;
            kexp[(size_t)i] = old_t;
            acc = old_r;
        }
        long total = 0;
        for (long i = 0; i < N; ++i) total += kexp[(size_t)i] * g.entries[(size_t)i];
        if (total == -1)
            for (auto& k : kexp) k = -k;
        else if (total != 1)
            throw std::logic_error("Bezout reduction failed");
    }

    ToricModel m = make_model(g, mono, kexp);

    // primitivity certificate: the stacked (ones; M) rows must have unit
    // invariant factors
    std::vector<std::vector<long>> stacked;
    stacked.push_back(std::vector<long>((size_t)N, 1L));
    for (long i = 0; i < N - 2; ++i) {
        std::vector<long> row;
        for (long j = 0; j < N; ++j) row.push_back((long)H.at(i, j));
        stacked.push_back(row);
    }
    auto snf = lattice::smith_normal_form(IntMatrix::from_rows(stacked));
    for (long t = 0; t < N - 1; ++t)
        if (snf.D.at(t, t) != 1)
            throw std::logic_error("realized monomials have non-primitive affine span");
    return m;
}

ToricModel reference_model() {
    hypergeom::GammaList g{{-18, -1, 2, 3, 5, 9}};
    std::vector<std::vector<long>> mono = {
        {1, 1, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}, {3, 1, 0, 0}, {0, 3, 0, 0}, {1, 0, 2, 0}};
    std::vector<long> kexp = {0, -1, 0, 0, 0, 0};
    return make_model(g, mono, kexp);
}

ToricModel reference_simplex_model() {
    hypergeom::GammaList g{{-18, -1, 2, 3, 5, 9}};
    std::vector<std::vector<long>> mono = {
        {0, 0, 0, 0}, {2, 3, 5, 9}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<long> kexp = {0, -1, 0, 0, 0, 0};
    return make_model(g, mono, kexp);
}

std::vector<LaurentPoly> reference_coordinate_change() {
    auto vars = model_vars(4);
    auto mono = [&](long a, long e1, long e2, long e3, long e4, int sign) {
        return lp_monomial(vars, {a, e1, e2, e3, e4}, Rat(sign));
    };
    // alpha -> alpha, u1 -> u4/(u1 u2 u3), u2 -> u1^2/u3, u3 -> u2^2/(u1 u3), u4 -> u3/u2
    return {mono(1, 0, 0, 0, 0, 1), mono(0, -1, -1, -1, 1, 1), mono(0, 2, 0, -1, 0, 1),
            mono(0, -1, 2, -1, 0, 1), mono(0, 0, -1, 1, 0, 1)};
}

GKZSystem build_gkz(const PointConfig& A) {
    if (A.points.empty()) throw std::invalid_argument("build_gkz: empty configuration");
    long n = A.dim;
    long N = (long)A.points.size();
    GKZSystem sys;
    sys.A = A;
    sys.Abar.dim = n + 1;
    for (const auto& p : A.points) {
        std::vector<long> q = {1};
        q.insert(q.end(), p.begin(), p.end());
        sys.Abar.points.push_back(q);
    }
    sys.beta.assign((size_t)(n + 1), Rat(0));
    IntMatrix Abar(n + 1, N);
    for (long j = 0; j < N; ++j)
        for (long i = 0; i <= n; ++i) Abar.at(i, j) = sys.Abar.points[(size_t)j][(size_t)i];
    if (lattice::mat_rank(Abar) != n + 1)
        throw std::invalid_argument("build_gkz: lifted vectors do not span a rank-(n+1) lattice");
    for (long i = 0; i <= n; ++i) {
        std::vector<long> row;
        for (long j = 0; j < N; ++j) row.push_back((long)Abar.at(i, j));
        sys.euler_ops.push_back(row);
    }
    IntMatrix K = lattice::integer_kernel(Abar);
    for (long c = 0; c < K.cols; ++c) {
        std::vector<long> l((size_t)N);
        for (long j = 0; j < N; ++j) l[(size_t)j] = (long)K.at(j, c);
        // sign convention: last nonzero coordinate positive
        for (long j = N - 1; j >= 0; --j) {
            if (l[(size_t)j] == 0) continue;
            if (l[(size_t)j] < 0)
                for (auto& v : l) v = -v;
            break;
        }
        BoxOp box;
        box.plus.assign((size_t)N, 0L);
        box.minus.assign((size_t)N, 0L);
        for (long j = 0; j < N; ++j) {
            if (l[(size_t)j] > 0) box.plus[(size_t)j] = l[(size_t)j];
            if (l[(size_t)j] < 0) box.minus[(size_t)j] = -l[(size_t)j];
        }
        sys.box_ops.push_back(box);
    }
    return sys;
}

Restriction restrict_to_line(const GKZSystem& sys, const hypergeom::GammaList& g,
                             const std::vector<long>& kexp) {
    if (sys.box_ops.size() != 1)
        throw std::invalid_argument("restrict_to_line: relation lattice rank is not 1");
    long N = (long)g.entries.size();
    const BoxOp& box = sys.box_ops[0];
    std::vector<long> l((size_t)N);
    for (long j = 0; j < N; ++j) l[(size_t)j] = box.plus[(size_t)j] - box.minus[(size_t)j];
    bool same = true, opposite = true;
    for (long j = 0; j < N; ++j) {
        same = same && l[(size_t)j] == g.entries[(size_t)j];
        opposite = opposite && l[(size_t)j] == -g.entries[(size_t)j];
    }
    if (!same && !opposite)
        throw std::invalid_argument("restrict_to_line: box relation is not the given gamma");
    long ksum = 0;
    for (long j = 0; j < N; ++j) ksum += kexp[(size_t)j] * g.entries[(size_t)j];
    if (ksum != 1)
        throw std::invalid_argument("restrict_to_line: twist exponents must pair to 1 with gamma");

    Restriction r;
    r.euler_certificate = true;
    for (const auto& row : sys.euler_ops) {
        long dot = 0;
        for (long j = 0; j < N; ++j) dot += row[(size_t)j] * g.entries[(size_t)j];
        if (dot != 0) r.euler_certificate = false;
    }

    // under Phi = G(w), w = prod v_i^{gamma_i}, the box operator rewrites via
    // v^n d^n = prod_{s<n} (theta - s) and theta_i -> gamma_i theta_w; clearing
    // the monomial prefactor leaves  P+(theta) - w o P-(theta)
    auto factor_product = [&](bool positive_side, long s_begin_offset) {
        UniPoly p = UniPoly::constant(1);
        for (long e : g.entries) {
            if (positive_side != (e > 0)) continue;
            long n = e > 0 ? e : -e;
            for (long s = 0; s < n; ++s)
                p = p * UniPoly({Rat(-(s + s_begin_offset)), Rat(e)});  // gamma*t - s
        }
        return p;
    };
    UniPoly pplus = factor_product(true, 0);
    UniPoly pminus_raw = factor_product(false, 0);
    UniPoly pminus_norm = factor_product(false, 1);

    using namespace ore;
    LaurentPoly alpha = lp_monomial(alpha_var(), {1}, Rat(1));
    // w = -alpha, so  P+ - w o P-  becomes  P+ + alpha * P-
    r.raw = ore_from_dpoly(pplus) + ore_from_dpoly(pminus_raw, alpha);
    r.normalized = ore_from_dpoly(pplus) + ore_from_dpoly(pminus_norm, alpha);
    return r;
}

// ------------------------------------------------------- finite fields

static void check_prime(long p) {
    if (p < 2 || p > 64) throw std::invalid_argument("p must be a prime <= 64");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p is not prime");
}

static long mod_pow(long b, long e, long p) {
    b %= p;
    if (b < 0) b += p;
    if (e < 0) {
        // inverse via Fermat
        long inv = mod_pow(b, p - 2, p);
        return mod_pow(inv, -e, p);
    }
    long r = 1;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

static long rat_mod(const Rat& c, long p) {
    Int num = boost::multiprecision::numerator(c) % p;
    Int den = boost::multiprecision::denominator(c) % p;
    long n = (long)num, d = (long)den;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::runtime_error("coefficient denominator vanishes mod p");
    return n * mod_pow(d, p - 2, p) % p;
}

std::vector<long> count_torus_points_all_alpha(const LaurentPoly& f, long p) {
    check_prime(p);
    int ai = lp_var_index(f, "alpha");
    if (ai != 0) throw std::invalid_argument("count_torus_points: first variable must be alpha");
    long n = f.arity() - 1;
    if (n < 1 || n > 4) throw std::invalid_argument("count_torus_points: 1..4 torus variables");

    size_t nt = f.n_terms();
    std::vector<long> coef(nt), aexp(nt);
    std::vector<std::vector<long>> uexp(nt);
    {
        size_t i = 0;
        for (const auto& [e, c] : f.terms) {
            coef[i] = rat_mod(c, p);
            aexp[i] = e[0];
            uexp[i] = std::vector<long>(e.begin() + 1, e.end());
            ++i;
        }
    }
    // (-alpha)^k twists are already folded into the coefficients/exponents;
    // precompute alpha powers per alpha value
    std::vector<std::vector<long>> apow((size_t)p, std::vector<long>(nt));
    for (long a = 1; a < p; ++a)
        for (size_t i = 0; i < nt; ++i) apow[(size_t)a][i] = mod_pow(a, aexp[i], p);

    std::vector<long> counts((size_t)p, 0L);
    std::vector<long> x((size_t)n, 1L);
    std::vector<long> tval(nt);
    for (;;) {
        for (size_t i = 0; i < nt; ++i) {
            long t = coef[i];
            for (long v = 0; v < n; ++v) t = t * mod_pow(x[(size_t)v], uexp[i][(size_t)v], p) % p;
            tval[i] = t;
        }
        for (long a = 1; a < p; ++a) {
            long s = 0;
            const auto& ap = apow[(size_t)a];
            for (size_t i = 0; i < nt; ++i) s += tval[i] * ap[i] % p;
            if (s % p == 0) ++counts[(size_t)a];
        }
        long k = n - 1;
        while (k >= 0 && x[(size_t)k] == p - 1) {
            x[(size_t)k] = 1;
            --k;
        }
        if (k < 0) break;
        ++x[(size_t)k];
    }
    return counts;
}

long count_torus_points(const LaurentPoly& f, long p, long alphaval) {
    check_prime(p);
    alphaval %= p;
    if (alphaval < 0) alphaval += p;
    if (alphaval == 0) throw std::invalid_argument("count_torus_points: alpha must be a unit");
    return count_torus_points_all_alpha(f, p)[(size_t)alphaval];
}

std::vector<std::pair<long, long>> torus_zeros_2d(const LaurentPoly& f, long p, long alphaval) {
    check_prime(p);
    int ai = lp_var_index(f, "alpha");
    LaurentPoly g = ai >= 0 ? lp_specialize(f, ai, Rat(alphaval)) : f;
    if (g.arity() != 2) throw std::invalid_argument("torus_zeros_2d: expected a two-variable curve");
    std::vector<std::pair<long, long>> zs;
    for (long x = 1; x < p; ++x)
        for (long y = 1; y < p; ++y) {
            long s = 0;
            for (const auto& [e, c] : g.terms)
                s = (s + rat_mod(c, p) * mod_pow(x, e[0], p) % p * mod_pow(y, e[1], p)) % p;
            if (s == 0) zs.emplace_back(x, y);
        }
    return zs;
}

std::string gkz_json(const GKZSystem& sys) {
    std::ostringstream os;
    os << "{\"euler\":[";
    for (size_t i = 0; i < sys.euler_ops.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < sys.euler_ops[i].size(); ++j)
            os << (j ? "," : "") << sys.euler_ops[i][j];
        os << "]";
    }
    os << "],\"box\":[";
    for (size_t i = 0; i < sys.box_ops.size(); ++i) {
        os << (i ? "," : "") << "{\"plus\":[";
        for (size_t j = 0; j < sys.box_ops[i].plus.size(); ++j)
            os << (j ? "," : "") << sys.box_ops[i].plus[j];
        os << "],\"minus\":[";
        for (size_t j = 0; j < sys.box_ops[i].minus.size(); ++j)
            os << (j ? "," : "") << sys.box_ops[i].minus[j];
        os << "]}";
    }
    os << "]}";
    return os.str();
}

}  // namespace prymhg::gkz
