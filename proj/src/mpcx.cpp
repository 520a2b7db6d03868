#include "prymhg/mpcx.hpp"

#include <sstream>

namespace prymhg::mp {

void set_precision_bits(unsigned bits) {
    unsigned digits = (unsigned)(bits * 0.30103) + 2;
    Real::default_precision(digits);
}

Real real_from_rat(const Rat& x) {
    return Real(boost::multiprecision::numerator(x).str()) /
           Real(boost::multiprecision::denominator(x).str());
}

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator-(const Cx& a) { return {-a.re, -a.im}; }

Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cx operator/(const Cx& a, const Cx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Cx conj(const Cx& a) { return {a.re, -a.im}; }
Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Real abs(const Cx& a) { return sqrt(norm2(a)); }

Cx cx_from_rat(const Rat& re, const Rat& im) { return {real_from_rat(re), real_from_rat(im)}; }

Cx cx_exp_i(const Real& angle) { return {cos(angle), sin(angle)}; }

std::string cx_str(const Cx& a, unsigned digits) {
    return a.re.str(digits) + (a.im >= 0 ? "+" : "") + a.im.str(digits) + "i";
}

CMat CMat::identity(long size) {
    CMat I(size);
    for (long i = 0; i < size; ++i) I.at(i, i) = Cx(Real(1));
    return I;
}

CMat operator*(const CMat& A, const CMat& B) {
    if (A.n != B.n) throw std::invalid_argument("CMat product size mismatch");
    CMat C(A.n);
    for (long i = 0; i < A.n; ++i)
        for (long k = 0; k < A.n; ++k) {
            const Cx& f = A.at(i, k);
            if (f.re == 0 && f.im == 0) continue;
            for (long j = 0; j < A.n; ++j) C.at(i, j) = C.at(i, j) + f * B.at(k, j);
        }
    return C;
}

CMat operator-(const CMat& A, const CMat& B) {
    CMat C(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

CMat cmat_inverse(const CMat& A) {
    long n = A.n;
    CMat M = A, I = CMat::identity(n);
    for (long c = 0; c < n; ++c) {
        long piv = c;
        Real best = abs(M.at(c, c));
        for (long i = c + 1; i < n; ++i) {
            Real v = abs(M.at(i, c));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0) throw std::runtime_error("cmat_inverse: singular matrix");
        if (piv != c)
            for (long j = 0; j < n; ++j) {
                std::swap(M.at(c, j), M.at(piv, j));
                std::swap(I.at(c, j), I.at(piv, j));
            }
        Cx p = M.at(c, c);
        for (long j = 0; j < n; ++j) {
            M.at(c, j) = M.at(c, j) / p;
            I.at(c, j) = I.at(c, j) / p;
        }
        for (long i = 0; i < n; ++i) {
            if (i == c) continue;
            Cx f = M.at(i, c);
            if (f.re == 0 && f.im == 0) continue;
            for (long j = 0; j < n; ++j) {
                M.at(i, j) = M.at(i, j) - f * M.at(c, j);
                I.at(i, j) = I.at(i, j) - f * I.at(c, j);
            }
        }
    }
    return I;
}

Real cmat_max_norm(const CMat& A) {
    Real m = 0;
    for (const auto& x : A.a) {
        Real v = abs(x);
        if (v > m) m = v;
    }
    return m;
}

std::vector<Cx> charpoly(const CMat& A) {
    // Faddeev-LeVerrier
    long n = A.n;
    std::vector<Cx> c((size_t)n + 1);
    c[(size_t)n] = Cx(Real(1));
    CMat M = CMat::identity(n);
    for (long k = 1; k <= n; ++k) {
        M = A * M;
        Cx tr;
        for (long i = 0; i < n; ++i) tr = tr + M.at(i, i);
        Cx ck = Cx(Real(-1) / Real(k)) * tr;
        c[(size_t)(n - k)] = ck;
        for (long i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + ck;
    }
    return c;
}

std::vector<Real> singular_values(const CMat& A) {
    long n = A.n;
    std::vector<std::vector<Cx>> col((size_t)n, std::vector<Cx>((size_t)n));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < n; ++i) col[(size_t)j][(size_t)i] = A.at(i, j);
    Real eps = pow(Real(2), -(long)(Real::default_precision() * 3.2) + 8);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (long p = 0; p < n - 1; ++p)
            for (long q = p + 1; q < n; ++q) {
                Real app = 0, aqq = 0;
                Cx apq;
                for (long i = 0; i < n; ++i) {
                    app += norm2(col[(size_t)p][(size_t)i]);
                    aqq += norm2(col[(size_t)q][(size_t)i]);
                    apq = apq + conj(col[(size_t)p][(size_t)i]) * col[(size_t)q][(size_t)i];
                }
                Real apq_abs = abs(apq);
                if (apq_abs <= eps * sqrt(app * aqq) || apq_abs == 0) continue;
                rotated = true;
                // rephase the q column so the pairing is real, then rotate
                Cx phase = conj(apq) / Cx(apq_abs);
                Real tau = (aqq - app) / (2 * apq_abs);
                Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                         (boost::multiprecision::abs(tau) + sqrt(1 + tau * tau));
                Real cth = 1 / sqrt(1 + t * t);
                Real sth = cth * t;
                for (long i = 0; i < n; ++i) {
                    Cx vp = col[(size_t)p][(size_t)i];
                    Cx vq = phase * col[(size_t)q][(size_t)i];
                    col[(size_t)p][(size_t)i] = Cx(cth) * vp - Cx(sth) * vq;
                    col[(size_t)q][(size_t)i] = Cx(sth) * vp + Cx(cth) * vq;
                }
            }
        if (!rotated) break;
    }
    std::vector<Real> sv;
    for (long j = 0; j < n; ++j) {
        Real s = 0;
        for (long i = 0; i < n; ++i) s += norm2(col[(size_t)j][(size_t)i]);
        sv.push_back(sqrt(s));
    }
    std::sort(sv.begin(), sv.end(), std::greater<Real>());
    return sv;
}

}  // namespace prymhg::mp
