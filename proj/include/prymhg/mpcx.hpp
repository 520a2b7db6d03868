#pragma once

#include "prymhg/exact.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace prymhg::mp {

using Real = boost::multiprecision::mpfr_float;  // runtime precision

void set_precision_bits(unsigned bits);
Real real_from_rat(const Rat& x);

struct Cx {
    Real re{0}, im{0};

    Cx() = default;
    Cx(Real r) : re(std::move(r)) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx(int r) : re(r) {}
};

Cx operator+(const Cx& a, const Cx& b);
Cx operator-(const Cx& a, const Cx& b);
Cx operator-(const Cx& a);
Cx operator*(const Cx& a, const Cx& b);
Cx operator/(const Cx& a, const Cx& b);
Cx conj(const Cx& a);
Real abs(const Cx& a);
Real norm2(const Cx& a);  // |a|^2
Cx cx_from_rat(const Rat& re, const Rat& im = Rat(0));
Cx cx_exp_i(const Real& angle);  // e^{i angle}
std::string cx_str(const Cx& a, unsigned digits = 0);

// dense complex matrix, row-major
struct CMat {
    long n = 0;
    std::vector<Cx> a;

    CMat() = default;
    explicit CMat(long size) : n(size), a((size_t)(size * size)) {}
    Cx& at(long i, long j) { return a[(size_t)(i * n + j)]; }
    const Cx& at(long i, long j) const { return a[(size_t)(i * n + j)]; }
    static CMat identity(long size);
};

CMat operator*(const CMat& A, const CMat& B);
CMat operator-(const CMat& A, const CMat& B);
CMat cmat_inverse(const CMat& A);
Real cmat_max_norm(const CMat& A);

// monic characteristic polynomial, ascending coefficients c[0..n], c[n] = 1
std::vector<Cx> charpoly(const CMat& A);

// singular values, descending (one-sided Jacobi)
std::vector<Real> singular_values(const CMat& A);

}  // namespace prymhg::mp
