#include "prymhg/hodge.hpp"

#include "prymhg/conic.hpp"

#include <sstream>

namespace prymhg::hodge {

long HodgeTable::entry(int p, int q) const {
    auto it = h.find({p, q});
    return it == h.end() ? 0 : it->second;
}

long HodgeTable::total() const {
    long s = 0;
    for (const auto& [pq, v] : h) s += v;
    return s;
}

long HodgeTable::weight_total(int w) const {
    long s = 0;
    for (const auto& [pq, v] : h)
        if (pq.first + pq.second == w) s += v;
    return s;
}

bool HodgeTable::symmetric() const {
    for (const auto& [pq, v] : h)
        if (entry(pq.second, pq.first) != v) return false;
    return true;
}

HodgeTable reference_table() {
    HodgeTable t;
    t.h[{0, 0}] = 1;
    t.h[{1, 0}] = 1;
    t.h[{0, 1}] = 1;
    t.h[{1, 1}] = 7;
    t.h[{2, 1}] = 4;
    t.h[{1, 2}] = 4;
    return t;
}

static lattice::Polytope newton_polytope(const gkz::ToricModel& m) {
    lattice::PointConfig cfg;
    cfg.dim = m.monomials.dim;
    cfg.points = m.monomials.points;
    return lattice::hull_and_facets(cfg);
}

DimensionReport dimension_identities(const hypergeom::GammaList& g) {
    gkz::ToricModel model = gkz::realize_monomials(g);
    lattice::Polytope P = newton_polytope(model);
    DimensionReport r;
    r.vol = lattice::normalized_volume(P);
    r.n = P.dim;
    r.dim_full = r.vol + r.n;
    r.dim_primitive = r.vol - 1;
    r.dim_relative = r.vol;
    r.reducible_order = hypergeom::build_reducible_operator(g).order();
    r.irreducible_order = hypergeom::reduced_exponents(g).order;
    HodgeTable t = reference_table();
    r.table_total = t.total();
    r.weight3_total = t.weight_total(3);
    r.vol_equals_reducible_order = r.vol == r.reducible_order;
    r.primitive_equals_table_total = r.dim_primitive == r.table_total;
    r.weight3_equals_irreducible_order = r.weight3_total == r.irreducible_order;
    return r;
}

bool geometric_genus_check(const hypergeom::GammaList& g) {
    gkz::ToricModel model = gkz::realize_monomials(g);
    lattice::Polytope P = newton_polytope(model);
    long interior = (long)lattice::lattice_points(P, 1, true).size();
    if (P.dim == 4) return interior == reference_table().entry(3, 0);
    if (P.dim == 2) {
        // curve analogue: the interior count is the top coefficient of the
        // delta-vector, which is assembled from closed dilate counts instead
        std::vector<Int> dv = lattice::delta_vector(P);
        return Int(interior) == dv.back();
    }
    throw std::invalid_argument("geometric_genus_check: unsupported polytope dimension");
}

ChainReport rank_chain_report() {
    ChainReport r;
    hypergeom::GammaList g{{-18, -1, 2, 3, 5, 9}};
    r.ranks.push_back({"operator order", hypergeom::reduced_exponents(g).order, "hypergeom"});
    r.ranks.push_back({"weight-3 slice of the dimension table", reference_table().weight_total(3),
                       "hodge"});
    // conic pipeline: anti-invariant rank 2*genus(cover) - 2*genus(base)
    gkz::ToricModel model = gkz::reference_model();
    conic::QuadForm3 chart = conic::conic_chart(model);
    conic::DiagResult diag = conic::diagonalize(chart);
    conic::PlaneCurveModel delta = conic::discriminant(diag.diag);
    conic::PlaneCurveModel cover = conic::double_cover(diag.diag, delta);
    long gbase = conic::genus_from_polytope(delta);
    long gcover = conic::genus_from_polytope(cover);
    r.ranks.push_back({"2g(cover) - 2g(base)", 2 * gcover - 2 * gbase, "conic"});
    conic::WeightedCurve wc = conic::projective_closure(cover, {1, 1, 3}, {"x0", "x1", "y"});
    long fixed = conic::involution_fixed_points(wc).count;
    // anti-invariant rank via the covering formula, using only the base genus
    // and the fixed-point count: 2g(base) - 2 + #fixed
    r.ranks.push_back({"anti-invariant lattice rank (2g - 2 + #fixed)", 2 * gbase - 2 + fixed,
                       "conic"});
    r.all_equal = true;
    for (const auto& item : r.ranks) r.all_equal = r.all_equal && item.value == r.ranks[0].value;
    r.cokernel_note = "over the integers the trace map has cokernel Z/2 (metadata, not a rank)";
    hypergeom::GammaList curve_gamma{{-9, 1, 3, 5}};
    r.curve_side_order = hypergeom::reduced_exponents(curve_gamma).order;
    r.curve_side_genus2 = 2 * gbase;
    return r;
}

std::string table_json(const HodgeTable& t) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            long v = t.entry(p, q);
            if (v == 0) continue;
            os << (first ? "" : ",") << "{\"p\":" << p << ",\"q\":" << q << ",\"h\":" << v << "}";
            first = false;
        }
    os << "]";
    return os.str();
}

}  // namespace prymhg::hodge
