#include "prymhg/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace prymhg;
using namespace prymhg::lattice;

TEST_CASE("smith normal form examples") {
    SmithResult s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));

    IntMatrix row = IntMatrix::from_rows({{2, 4, 6}});
    s = smith_normal_form(row);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(0, 1) == 0);
    CHECK(s.D.at(0, 2) == 0);

    IntMatrix gamma = IntMatrix::from_rows({{-18, -1, 2, 3, 5, 9}});
    s = smith_normal_form(gamma);
    CHECK(s.D.at(0, 0) == 1);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        long r = 1 + (long)(rng() % 4), c = 1 + (long)(rng() % 4);
        IntMatrix M(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) M.at(i, j) = (long)(rng() % 19) - 9;
        SmithResult s = smith_normal_form(M);
        CHECK(s.U * M * s.V == s.D);
        Int du = mat_det(s.U), dv = mat_det(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        long n = std::min(r, c);
        for (long t = 0; t + 1 < n; ++t)
            if (s.D.at(t, t) != 0 && s.D.at(t + 1, t + 1) != 0)
                CHECK(s.D.at(t + 1, t + 1) % s.D.at(t, t) == 0);
    }
}

TEST_CASE("integer kernel") {
    // the five homogeneity rows of the six-monomial configuration
    IntMatrix M = IntMatrix::from_rows({{1, 1, 1, 1, 1, 1},
                                        {1, 0, 0, 3, 0, 1},
                                        {1, 0, 0, 1, 3, 0},
                                        {1, 0, 0, 0, 0, 2},
                                        {0, 2, 1, 0, 0, 0}});
    IntMatrix K = integer_kernel(M);
    REQUIRE(K.cols == 1);
    std::vector<long> gen;
    for (long i = 0; i < 6; ++i) gen.push_back((long)K.at(i, 0));
    std::vector<long> gamma = {-18, -1, 2, 3, 5, 9};
    bool plus = true, minus = true;
    for (long i = 0; i < 6; ++i) {
        plus = plus && gen[(size_t)i] == gamma[(size_t)i];
        minus = minus && gen[(size_t)i] == -gamma[(size_t)i];
    }
    CHECK((plus || minus));

    CHECK(integer_kernel(IntMatrix::identity(3)).cols == 0);

    IntMatrix two = IntMatrix::from_rows({{1, 1}, {0, 0}});
    IntMatrix K2 = integer_kernel(two);
    REQUIRE(K2.cols == 1);
    CHECK(K2.at(0, 0) == -K2.at(1, 0));

    // saturation: kernel basis has unit invariant factors
    SmithResult s = smith_normal_form(K);
    CHECK(s.D.at(0, 0) == 1);
}

TEST_CASE("hull and facets") {
    PointConfig tri;
    tri.dim = 2;
    tri.points = {{0, 0}, {3, 1}, {0, 3}, {1, 2}};
    Polytope P = hull_and_facets(tri);
    CHECK(P.vertices == std::vector<std::vector<long>>{{0, 0}, {0, 3}, {3, 1}});
    CHECK(P.facets.size() == 3);
    for (const auto& f : P.facets)
        for (const auto& p : tri.points) {
            Int v = 0;
            for (int j = 0; j < 2; ++j) v += f.normal[(size_t)j] * p[(size_t)j];
            CHECK(v >= f.offset);
        }

    PointConfig sq;
    sq.dim = 2;
    sq.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    Polytope Q = hull_and_facets(sq);
    CHECK(Q.vertices.size() == 4);
    CHECK(Q.facets.size() == 4);

    PointConfig six;
    six.dim = 4;
    six.points = {{1, 1, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}, {3, 1, 0, 0}, {0, 3, 0, 0},
                  {1, 0, 2, 0}};
    Polytope R = hull_and_facets(six);
    CHECK(R.dim == 4);
    CHECK(R.vertices.size() == 6);

    PointConfig empty;
    empty.dim = 2;
    CHECK_THROWS(hull_and_facets(empty));
}

TEST_CASE("lattice point enumeration") {
    PointConfig tri;
    tri.dim = 2;
    tri.points = {{0, 0}, {3, 1}, {0, 3}};
    Polytope P = hull_and_facets(tri);
    auto interior = lattice_points(P, 1, true);
    CHECK(interior == std::vector<std::vector<long>>{{1, 1}, {1, 2}, {2, 1}});

    PointConfig tri2;
    tri2.dim = 2;
    tri2.points = {{0, 0}, {6, 1}, {0, 3}};
    CHECK(lattice_points(hull_and_facets(tri2), 1, true).size() == 7);

    PointConfig seg;
    seg.dim = 1;
    seg.points = {{0}, {1}};
    CHECK(lattice_points(hull_and_facets(seg), 1, true).empty());

    try {
        lattice_points(P, 10000, false, 100);
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("normalized volume") {
    for (long d = 1; d <= 4; ++d) {
        PointConfig simplex;
        simplex.dim = d;
        simplex.points.push_back(std::vector<long>((size_t)d, 0));
        for (long i = 0; i < d; ++i) {
            std::vector<long> e((size_t)d, 0);
            e[(size_t)i] = 1;
            simplex.points.push_back(e);
        }
        CHECK(normalized_volume(hull_and_facets(simplex)) == 1);
    }
    PointConfig tri;
    tri.dim = 2;
    tri.points = {{0, 0}, {3, 1}, {0, 3}};
    // shoelace: 2 * area = |3*3 - 1*0| = 9
    CHECK(normalized_volume(hull_and_facets(tri)) == 9);

    PointConfig six;
    six.dim = 4;
    six.points = {{1, 1, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}, {3, 1, 0, 0}, {0, 3, 0, 0},
                  {1, 0, 2, 0}};
    CHECK(normalized_volume(hull_and_facets(six)) == 19);
}

TEST_CASE("delta vector") {
    PointConfig unit;
    unit.dim = 2;
    unit.points = {{0, 0}, {1, 0}, {0, 1}};
    CHECK(delta_vector(hull_and_facets(unit)) == std::vector<Int>{1, 0, 0});

    PointConfig tri;
    tri.dim = 2;
    tri.points = {{0, 0}, {4, 0}, {0, 4}};
    Polytope P = hull_and_facets(tri);
    CHECK(lattice_points(P, 1, false).size() == 15);
    CHECK(lattice_points(P, 2, false).size() == 45);
    CHECK(delta_vector(P) == std::vector<Int>{1, 12, 3});

    PointConfig six;
    six.dim = 4;
    six.points = {{1, 1, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}, {3, 1, 0, 0}, {0, 3, 0, 0},
                  {1, 0, 2, 0}};
    Polytope Q = hull_and_facets(six);
    std::vector<Int> dv = delta_vector(Q);
    Int sum = 0;
    for (const Int& x : dv) sum += x;
    CHECK(sum == normalized_volume(Q));
}

TEST_CASE("Ehrhart reciprocity on fixtures") {
    std::vector<PointConfig> fixtures(3);
    fixtures[0].dim = 2;
    fixtures[0].points = {{0, 0}, {3, 1}, {0, 3}};
    fixtures[1].dim = 2;
    fixtures[1].points = {{0, 0}, {4, 0}, {0, 4}};
    fixtures[2].dim = 3;
    fixtures[2].points = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    for (const auto& cfg : fixtures) {
        Polytope P = hull_and_facets(cfg);
        long d = P.dim;
        // closed counts at 0..d determine the counting polynomial; compare its
        // value at -m with the interior count by direct enumeration
        std::vector<Rat> L;
        L.push_back(Rat(1));
        for (long m = 1; m <= d; ++m) L.push_back(Rat((long)lattice_points(P, m, false).size()));
        auto value_at = [&](const Rat& x) {
            // Lagrange interpolation through (0..d, L)
            Rat acc = 0;
            for (long i = 0; i <= d; ++i) {
                Rat term = L[(size_t)i];
                for (long j = 0; j <= d; ++j) {
                    if (i == j) continue;
                    term *= (x - Rat(j)) / Rat(i - j);
                }
                acc += term;
            }
            return acc;
        };
        for (long m = 1; m <= 2; ++m) {
            Rat predicted = value_at(Rat(-m));
            if (d % 2 != 0) predicted = -predicted;
            CHECK(predicted == Rat((long)lattice_points(P, m, true).size()));
        }
    }
}

TEST_CASE("affine equivalence") {
    PointConfig A;
    A.dim = 4;
    A.points = {{1, 1, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}, {3, 1, 0, 0}, {0, 3, 0, 0},
                {1, 0, 2, 0}};
    A.labels = {-18, -1, 2, 3, 5, 9};
    auto self = affine_equivalent(A, A);
    REQUIRE(self.has_value());
    CHECK(self->T == IntMatrix::identity(4));

    PointConfig B;
    B.dim = 4;
    B.points = {{0, 0, 0, 0}, {2, 3, 5, 9}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                {0, 0, 0, 1}};
    B.labels = A.labels;
    CHECK(affine_equivalent(A, B).has_value());

    PointConfig C = A;  // whole configuration translated
    for (auto& p : C.points) p[0] += 1;
    auto shifted = affine_equivalent(C, A);
    REQUIRE(shifted.has_value());
    CHECK(shifted->shift == std::vector<Int>{-1, 0, 0, 0});

    PointConfig D = B;  // permuted labels with no matching equivalence
    D.labels = {-18, -1, 2, 3, 9, 5};
    CHECK_FALSE(affine_equivalent(A, D).has_value());
}
