#include "prymhg/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace prymhg::lattice {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix I(n, n);
    for (long i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix M((long)rows.size(), rows.empty() ? 0 : (long)rows[0].size());
    for (long i = 0; i < M.rows; ++i) {
        if ((long)rows[(size_t)i].size() != M.cols)
            throw std::invalid_argument("from_rows: ragged rows");
        for (long j = 0; j < M.cols; ++j) M.at(i, j) = rows[(size_t)i][(size_t)j];
    }
    return M;
}

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (long i = 0; i < A.rows; ++i)
        for (long k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (long j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

IntMatrix transpose(const IntMatrix& A) {
    IntMatrix T(A.cols, A.rows);
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

// rational Gaussian elimination; returns rank, optionally reduces an
// augmented right-hand side along the way
static long rat_elim(std::vector<std::vector<Rat>>& m) {
    long rows = (long)m.size();
    long cols = rows ? (long)m[0].size() : 0;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (m[(size_t)i][(size_t)c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[(size_t)r], m[(size_t)piv]);
        for (long i = 0; i < rows; ++i) {
            if (i == r || m[(size_t)i][(size_t)c] == 0) continue;
            Rat f = m[(size_t)i][(size_t)c] / m[(size_t)r][(size_t)c];
            for (long j = c; j < cols; ++j)
                m[(size_t)i][(size_t)j] -= f * m[(size_t)r][(size_t)j];
        }
        ++r;
    }
    return r;
}

static std::vector<std::vector<Rat>> to_rat(const IntMatrix& A) {
    std::vector<std::vector<Rat>> m((size_t)A.rows, std::vector<Rat>((size_t)A.cols));
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) m[(size_t)i][(size_t)j] = Rat(A.at(i, j));
    return m;
}

long mat_rank(const IntMatrix& A) {
    auto m = to_rat(A);
    return rat_elim(m);
}

Int mat_det(const IntMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    auto m = to_rat(A);
    Rat det = 1;
    long n = A.rows;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long i = c; i < n; ++i)
            if (m[(size_t)i][(size_t)c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[(size_t)c], m[(size_t)piv]);
            det = -det;
        }
        det *= m[(size_t)c][(size_t)c];
        for (long i = c + 1; i < n; ++i) {
            if (m[(size_t)i][(size_t)c] == 0) continue;
            Rat f = m[(size_t)i][(size_t)c] / m[(size_t)c][(size_t)c];
            for (long j = c; j < n; ++j) m[(size_t)i][(size_t)j] -= f * m[(size_t)c][(size_t)j];
        }
    }
    if (boost::multiprecision::denominator(det) != 1)
        throw std::logic_error("integer determinant came out fractional");
    return boost::multiprecision::numerator(det);
}

// ------------------------------------------------------------------- SNF

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult s;
    s.D = M;
    s.U = IntMatrix::identity(M.rows);
    s.V = IntMatrix::identity(M.cols);
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;

    auto swap_rows = [&](long a, long b) {
        if (a == b) return;
        for (long j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
        for (long j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto swap_cols = [&](long a, long b) {
        if (a == b) return;
        for (long i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
        for (long i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    auto add_row = [&](long dst, long src, const Int& f) {  // row_dst += f*row_src
        for (long j = 0; j < D.cols; ++j) D.at(dst, j) += f * D.at(src, j);
        for (long j = 0; j < U.cols; ++j) U.at(dst, j) += f * U.at(src, j);
    };
    auto add_col = [&](long dst, long src, const Int& f) {
        for (long i = 0; i < D.rows; ++i) D.at(i, dst) += f * D.at(i, src);
        for (long i = 0; i < V.rows; ++i) V.at(i, dst) += f * V.at(i, src);
    };

    long n = std::min(M.rows, M.cols);
    for (long t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            long pi = -1, pj = -1;
            for (long i = t; i < D.rows; ++i)
                for (long j = t; j < D.cols; ++j) {
                    if (D.at(i, j) == 0) continue;
                    if (pi < 0 || boost::multiprecision::abs(D.at(i, j)) <
                                      boost::multiprecision::abs(D.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = n;  // trailing block is zero
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool again = false;
            for (long i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                add_row(i, t, -q);
                if (D.at(i, t) != 0) again = true;
            }
            for (long j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                add_col(j, t, -q);
                if (D.at(t, j) != 0) again = true;
            }
            if (again) continue;

            // pivot must divide the whole trailing block
            long bi = -1, bj = -1;
            for (long i = t + 1; i < D.rows && bi < 0; ++i)
                for (long j = t + 1; j < D.cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi >= 0) {
                (void)bj;
                add_row(t, bi, Int(1));
                continue;
            }
            break;
        }
        if (t >= n) break;
    }
    for (long t = 0; t < n; ++t)
        if (D.at(t, t) < 0) {
            for (long j = 0; j < D.cols; ++j) D.at(t, j) = -D.at(t, j);
            for (long j = 0; j < U.cols; ++j) U.at(t, j) = -U.at(t, j);
        }
    return s;
}

IntMatrix integer_kernel(const IntMatrix& M) {
    SmithResult s = smith_normal_form(M);
    long n = std::min(M.rows, M.cols);
    std::vector<long> keep;
    for (long j = 0; j < M.cols; ++j) {
        bool zero = j >= n || s.D.at(j, j) == 0;
        if (zero) keep.push_back(j);
    }
    IntMatrix K(M.cols, (long)keep.size());
    for (long i = 0; i < M.cols; ++i)
        for (size_t j = 0; j < keep.size(); ++j) K.at(i, (long)j) = s.V.at(i, keep[j]);
    return K;
}

IntMatrix hermite_row_basis(const IntMatrix& M) {
    IntMatrix H = M;
    long r = 0;
    for (long c = 0; c < H.cols && r < H.rows; ++c) {
        // gcd-reduce column c on rows >= r
        for (;;) {
            long piv = -1;
            for (long i = r; i < H.rows; ++i)
                if (H.at(i, c) != 0 &&
                    (piv < 0 ||
                     boost::multiprecision::abs(H.at(i, c)) < boost::multiprecision::abs(H.at(piv, c))))
                    piv = i;
            if (piv < 0) break;
            if (piv != r)
                for (long j = 0; j < H.cols; ++j) std::swap(H.at(r, j), H.at(piv, j));
            bool done = true;
            for (long i = r + 1; i < H.rows; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q = H.at(i, c) / H.at(r, c);
                for (long j = 0; j < H.cols; ++j) H.at(i, j) -= q * H.at(r, j);
                if (H.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0)
            for (long j = 0; j < H.cols; ++j) H.at(r, j) = -H.at(r, j);
        for (long i = 0; i < r; ++i) {  // reduce entries above the pivot
            Int q = H.at(i, c);
            // floor division so residues land in [0, pivot)
            Int p = H.at(r, c);
            Int fq;
            if (q >= 0)
                fq = q / p;
            else
                fq = -((-q + p - 1) / p);
            if (fq != 0)
                for (long j = 0; j < H.cols; ++j) H.at(i, j) -= fq * H.at(r, j);
        }
        ++r;
    }
    IntMatrix B(r, H.cols);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < H.cols; ++j) B.at(i, j) = H.at(i, j);
    return B;
}

// ------------------------------------------------------------------ hulls

static std::vector<Rat> solve_unique(const std::vector<std::vector<Rat>>& A,
                                     const std::vector<Rat>& rhs) {
    // solves A x = rhs for A with full column rank (least one solution assumed)
    size_t rows = A.size(), cols = A[0].size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = A[i][j];
        m[i][cols] = rhs[i];
    }
    rat_elim(m);
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = 0;
        while (lead < cols && m[i][lead] == 0) ++lead;
        if (lead == cols) {
            if (m[i][cols] != 0) throw std::logic_error("inconsistent linear system");
            continue;
        }
        x[lead] = m[i][cols] / m[i][lead];
    }
    return x;
}

Polytope hull_and_facets(const PointConfig& pts) {
    if (pts.points.empty()) throw std::invalid_argument("hull_and_facets: empty point set");
    long d = pts.dim;
    if (d < 1 || d > 4) throw std::invalid_argument("hull_and_facets: dimension must be 1..4");
    std::vector<std::vector<long>> P(pts.points.begin(), pts.points.end());
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    long n = (long)P.size();

    {
        IntMatrix diff(n - 1, d);
        for (long i = 1; i < n; ++i)
            for (long j = 0; j < d; ++j)
                diff.at(i - 1, j) = P[(size_t)i][(size_t)j] - P[0][(size_t)j];
        if (mat_rank(diff) != d)
            throw std::invalid_argument("hull_and_facets: configuration is not full-dimensional");
    }

    auto dot = [&](const std::vector<Int>& nrm, const std::vector<long>& p) {
        Int s = 0;
        for (long j = 0; j < d; ++j) s += nrm[(size_t)j] * p[(size_t)j];
        return s;
    };

    std::set<std::pair<std::vector<Int>, Int>> facet_set;
    std::vector<long> idx((size_t)d);
    std::iota(idx.begin(), idx.end(), 0L);
    // iterate over all d-subsets of the points
    for (;;) {
        IntMatrix diff(d - 1, d);
        for (long i = 1; i < d; ++i)
            for (long j = 0; j < d; ++j)
                diff.at(i - 1, j) =
                    P[(size_t)idx[(size_t)i]][(size_t)j] - P[(size_t)idx[0]][(size_t)j];
        IntMatrix K = integer_kernel(diff);
        if (K.cols == 1) {  // points span a hyperplane
            std::vector<Int> nrm((size_t)d);
            for (long j = 0; j < d; ++j) nrm[(size_t)j] = K.at(j, 0);
            Int c = dot(nrm, P[(size_t)idx[0]]);
            bool all_ge = true, all_le = true;
            for (const auto& p : P) {
                Int v = dot(nrm, p);
                if (v < c) all_ge = false;
                if (v > c) all_le = false;
            }
            if (all_ge)
                facet_set.insert({nrm, c});
            else if (all_le) {
                for (auto& x : nrm) x = -x;
                facet_set.insert({nrm, -c});
            }
        }
        // next subset
        long k = d - 1;
        while (k >= 0 && idx[(size_t)k] == n - d + k) --k;
        if (k < 0) break;
        ++idx[(size_t)k];
        for (long i = k + 1; i < d; ++i) idx[(size_t)i] = idx[(size_t)i - 1] + 1;
    }

    Polytope poly;
    poly.dim = d;
    for (const auto& [nrm, c] : facet_set) poly.facets.push_back({nrm, c});

    for (const auto& p : P) {
        IntMatrix tight(0, d);
        std::vector<std::vector<long>> tight_rows;
        for (const auto& f : poly.facets)
            if (dot(f.normal, p) == f.offset) {
                std::vector<long> row;
                for (const auto& x : f.normal) row.push_back((long)x);
                tight_rows.push_back(row);
            }
        if (!tight_rows.empty() && mat_rank(IntMatrix::from_rows(tight_rows)) == d)
            poly.vertices.push_back(p);
    }
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

std::vector<std::vector<long>> lattice_points(const Polytope& P, long dilate, bool interior_only,
                                              long budget) {
    if (dilate < 1) throw std::invalid_argument("lattice_points: dilate must be positive");
    long d = P.dim;
    std::vector<long> lo((size_t)d), hi((size_t)d);
    for (long j = 0; j < d; ++j) {
        long mn = P.vertices[0][(size_t)j], mx = mn;
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[(size_t)j]);
            mx = std::max(mx, v[(size_t)j]);
        }
        lo[(size_t)j] = mn * dilate;
        hi[(size_t)j] = mx * dilate;
    }
    Int box = 1;
    for (long j = 0; j < d; ++j) box *= (Int)(hi[(size_t)j] - lo[(size_t)j] + 1);
    if (box > budget)
        throw std::runtime_error("lattice_points: bounding box of " + box.str() +
                                 " candidates exceeds the enumeration budget of " +
                                 std::to_string(budget));

    std::vector<std::vector<long>> out;
    std::vector<long> x = lo;
    for (;;) {
        bool ok = true;
        for (const auto& f : P.facets) {
            Int s = 0;
            for (long j = 0; j < d; ++j) s += f.normal[(size_t)j] * x[(size_t)j];
            Int bound = f.offset * dilate;
            if (interior_only ? !(s > bound) : !(s >= bound)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
        long k = d - 1;
        while (k >= 0 && x[(size_t)k] == hi[(size_t)k]) {
            x[(size_t)k] = lo[(size_t)k];
            --k;
        }
        if (k < 0) break;
        ++x[(size_t)k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

static Int nvol_rec(const std::vector<std::vector<long>>& pts, long d);

Int normalized_volume(const Polytope& P) {
    if (P.vertices.empty()) throw std::invalid_argument("normalized_volume: empty polytope");
    return nvol_rec(P.vertices, P.dim);
}

static Int nvol_rec(const std::vector<std::vector<long>>& pts, long d) {
    if (d == 1) {
        long mn = pts[0][0], mx = pts[0][0];
        for (const auto& p : pts) {
            mn = std::min(mn, p[0]);
            mx = std::max(mx, p[0]);
        }
        return Int(mx - mn);
    }
    PointConfig cfg;
    cfg.dim = d;
    cfg.points = pts;
    Polytope P = hull_and_facets(cfg);
    const auto& v0 = P.vertices[0];
    Int total = 0;
    for (const auto& f : P.facets) {
        Int h = -f.offset;
        for (long j = 0; j < d; ++j) h += f.normal[(size_t)j] * v0[(size_t)j];
        if (h == 0) continue;  // apex lies on this facet
        // collect the facet's vertices and flatten them into Z^(d-1)
        std::vector<std::vector<long>> fpts;
        for (const auto& p : P.vertices) {
            Int s = 0;
            for (long j = 0; j < d; ++j) s += f.normal[(size_t)j] * p[(size_t)j];
            if (s == f.offset) fpts.push_back(p);
        }
        IntMatrix nrow(1, d);
        for (long j = 0; j < d; ++j) nrow.at(0, j) = f.normal[(size_t)j];
        IntMatrix B = integer_kernel(nrow);  // d x (d-1), saturated basis of the facet direction lattice
        std::vector<std::vector<Rat>> Bq((size_t)d, std::vector<Rat>((size_t)(d - 1)));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d - 1; ++j) Bq[(size_t)i][(size_t)j] = Rat(B.at(i, j));
        std::vector<std::vector<long>> flat;
        for (const auto& p : fpts) {
            std::vector<Rat> rhs((size_t)d);
            for (long j = 0; j < d; ++j) rhs[(size_t)j] = Rat(p[(size_t)j] - fpts[0][(size_t)j]);
            auto x = solve_unique(Bq, rhs);
            std::vector<long> row;
            for (const auto& xi : x) {
                if (boost::multiprecision::denominator(xi) != 1)
                    throw std::logic_error("facet projection is not integral");
                row.push_back((long)boost::multiprecision::numerator(xi));
            }
            flat.push_back(row);
        }
        total += h * nvol_rec(flat, d - 1);
    }
    return total;
}

std::vector<Int> delta_vector(const Polytope& P, long budget) {
    long d = P.dim;
    if (d > 4) throw std::invalid_argument("delta_vector: dimension must be <= 4");
    std::vector<Int> L((size_t)d + 1);
    L[0] = 1;
    for (long m = 1; m <= d; ++m) L[(size_t)m] = (Int)lattice_points(P, m, false, budget).size();
    std::vector<Int> delta((size_t)d + 1, Int(0));
    for (long k = 0; k <= d; ++k) {
        Int s = 0;
        for (long j = 0; j <= k; ++j) {
            Int term = binomial((unsigned long)(d + 1), (unsigned long)j) * L[(size_t)(k - j)];
            s += (j % 2 == 0) ? term : -term;
        }
        delta[(size_t)k] = s;
    }
    return delta;
}

// ------------------------------------------------- affine equivalence

static bool try_sigma(const PointConfig& A, const PointConfig& B, const std::vector<long>& sigma,
                      AffineEquiv& out) {
    long d = A.dim;
    long n = (long)A.points.size();
    // difference vectors relative to the first point
    std::vector<std::vector<Rat>> DA((size_t)d, std::vector<Rat>((size_t)(n - 1)));
    for (long k = 1; k < n; ++k)
        for (long j = 0; j < d; ++j)
            DA[(size_t)j][(size_t)(k - 1)] =
                Rat(A.points[(size_t)k][(size_t)j] - A.points[0][(size_t)j]);
    // pick d independent difference columns
    std::vector<long> chosen;
    {
        std::vector<std::vector<Rat>> probe;
        for (long k = 0; k < n - 1 && (long)chosen.size() < d; ++k) {
            std::vector<Rat> col((size_t)d);
            for (long j = 0; j < d; ++j) col[(size_t)j] = DA[(size_t)j][(size_t)k];
            probe.push_back(col);
            std::vector<std::vector<Rat>> m = probe;
            if (rat_elim(m) == (long)probe.size())
                chosen.push_back(k);
            else
                probe.pop_back();
        }
        if ((long)chosen.size() != d)
            throw std::invalid_argument("affine_equivalent: configuration is affinely degenerate");
    }
    // solve T * DA[chosen] = DB[chosen] column by column via the inverse
    std::vector<std::vector<Rat>> S((size_t)d, std::vector<Rat>((size_t)d));
    for (long j = 0; j < d; ++j)
        for (long c = 0; c < d; ++c) S[(size_t)j][(size_t)c] = DA[(size_t)j][(size_t)chosen[(size_t)c]];
    // invert S by Gauss-Jordan on [S | I]
    std::vector<std::vector<Rat>> aug((size_t)d, std::vector<Rat>((size_t)(2 * d), Rat(0)));
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) aug[(size_t)i][(size_t)j] = S[(size_t)i][(size_t)j];
        aug[(size_t)i][(size_t)(d + i)] = 1;
    }
    if (rat_elim(aug) != d) return false;
    std::vector<std::vector<Rat>> Sinv((size_t)d, std::vector<Rat>((size_t)d));
    for (long i = 0; i < d; ++i) {
        long lead = 0;
        while (aug[(size_t)i][(size_t)lead] == 0) ++lead;
        for (long j = 0; j < d; ++j)
            Sinv[(size_t)lead][(size_t)j] = aug[(size_t)i][(size_t)(d + j)] / aug[(size_t)i][(size_t)lead];
    }
    // DB columns for the chosen difference indices
    std::vector<std::vector<Rat>> DBsel((size_t)d, std::vector<Rat>((size_t)d));
    for (long c = 0; c < d; ++c) {
        long k = chosen[(size_t)c] + 1;
        for (long j = 0; j < d; ++j)
            DBsel[(size_t)j][(size_t)c] = Rat(B.points[(size_t)sigma[(size_t)k]][(size_t)j] -
                                              B.points[(size_t)sigma[0]][(size_t)j]);
    }
    IntMatrix T(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            Rat v = 0;
            for (long k = 0; k < d; ++k) v += DBsel[(size_t)i][(size_t)k] * Sinv[(size_t)k][(size_t)j];
            if (boost::multiprecision::denominator(v) != 1) return false;
            T.at(i, j) = boost::multiprecision::numerator(v);
        }
    Int dt = mat_det(T);
    if (dt != 1 && dt != -1) return false;
    std::vector<Int> shift((size_t)d);
    for (long j = 0; j < d; ++j) {
        Int s = Int(B.points[(size_t)sigma[0]][(size_t)j]);
        for (long k = 0; k < d; ++k) s -= T.at(j, k) * Int(A.points[0][(size_t)k]);
        shift[(size_t)j] = s;
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < d; ++j) {
            Int v = shift[(size_t)j];
            for (long k = 0; k < d; ++k) v += T.at(j, k) * Int(A.points[(size_t)i][(size_t)k]);
            if (v != Int(B.points[(size_t)sigma[(size_t)i]][(size_t)j])) return false;
        }
    out.T = T;
    out.shift = shift;
    out.sigma = sigma;
    return true;
}

std::optional<AffineEquiv> affine_equivalent(const PointConfig& A, const PointConfig& B) {
    long n = (long)A.points.size();
    if (n != (long)B.points.size() || A.dim != B.dim || n > 8) return std::nullopt;
    std::vector<long> la = A.labels, lb = B.labels;
    if (la.empty()) la.assign((size_t)n, 0L);
    if (lb.empty()) lb.assign((size_t)n, 0L);

    std::vector<long> sigma((size_t)n, -1);
    std::vector<bool> used((size_t)n, false);
    AffineEquiv result;
    // depth-first over label-preserving assignments
    std::function<bool(long)> rec = [&](long i) -> bool {
        if (i == n) return try_sigma(A, B, sigma, result);
        for (long j = 0; j < n; ++j) {
            if (used[(size_t)j] || la[(size_t)i] != lb[(size_t)j]) continue;
            used[(size_t)j] = true;
            sigma[(size_t)i] = j;
            if (rec(i + 1)) return true;
            used[(size_t)j] = false;
        }
        return false;
    };
    if (rec(0)) return result;
    return std::nullopt;
}

std::string polytope_json(const Polytope& P) {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (size_t i = 0; i < P.vertices.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < P.vertices[i].size(); ++j)
            os << (j ? "," : "") << P.vertices[i][j];
        os << "]";
    }
    os << "],\"facets\":[";
    for (size_t i = 0; i < P.facets.size(); ++i) {
        os << (i ? "," : "") << "{\"n\":[";
        for (size_t j = 0; j < P.facets[i].normal.size(); ++j)
            os << (j ? "," : "") << P.facets[i].normal[j].str();
        os << "],\"c\":" << P.facets[i].offset.str() << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace prymhg::lattice
