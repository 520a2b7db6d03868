#pragma once

#include "prymhg/exact.hpp"

#include <optional>

namespace prymhg::lattice {

struct IntMatrix {
    long rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), a((size_t)(r * c), Int(0)) {}

    Int& at(long r, long c) { return a[(size_t)(r * cols + c)]; }
    const Int& at(long r, long c) const { return a[(size_t)(r * cols + c)]; }

    static IntMatrix identity(long n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B);
IntMatrix transpose(const IntMatrix& A);
long mat_rank(const IntMatrix& A);
Int mat_det(const IntMatrix& A);  // square only

struct SmithResult {
    IntMatrix U, D, V;  // U*M*V = D, U and V unimodular, diagonal divisibility chain
};
SmithResult smith_normal_form(const IntMatrix& M);

// columns form a basis of the saturated integer kernel {v : Mv = 0}
IntMatrix integer_kernel(const IntMatrix& M);

// canonical basis (row-style Hermite form, no zero rows) of the row span
IntMatrix hermite_row_basis(const IntMatrix& M);

// ---------------------------------------------------------------------------

struct PointConfig {
    long dim = 0;
    std::vector<std::vector<long>> points;
    std::vector<long> labels;  // optional, empty or one label per point
};

struct Facet {
    std::vector<Int> normal;  // primitive inward normal
    Int offset;               // <normal, x> >= offset on the polytope
};

struct Polytope {
    long dim = 0;  // dimension of the affine span (= ambient dimension here)
    std::vector<std::vector<long>> vertices;
    std::vector<Facet> facets;
};

// brute-force hull for full-dimensional configurations, dim <= 4
Polytope hull_and_facets(const PointConfig& pts);

std::vector<std::vector<long>> lattice_points(const Polytope& P, long dilate, bool interior_only,
                                              long budget = 10000000L);

Int normalized_volume(const Polytope& P);  // dim! * euclidean volume, by subdivision

std::vector<Int> delta_vector(const Polytope& P, long budget = 10000000L);

struct AffineEquiv {
    IntMatrix T;             // unimodular
    std::vector<Int> shift;  // T*a_i + shift = b_{sigma(i)}
    std::vector<long> sigma;
};
std::optional<AffineEquiv> affine_equivalent(const PointConfig& A, const PointConfig& B);

std::string polytope_json(const Polytope& P);

}  // namespace prymhg::lattice
