#pragma once

#include "prymhg/gkz.hpp"
#include "prymhg/hypergeom.hpp"

namespace prymhg::hodge {

struct HodgeTable {
    std::map<std::pair<int, int>, long> h;  // (p,q) -> dimension, zeros omitted

    long entry(int p, int q) const;
    long total() const;
    long weight_total(int w) const;
    bool symmetric() const;
};

// stored mixed-Hodge dimension table for the primitive middle cohomology of
// the threefold family; validated by the surrounding identities rather than
// recomputed from first principles
HodgeTable reference_table();

struct DimensionReport {
    Int vol;             // normalized volume of the Newton polytope
    long n;              // its dimension
    Int dim_full;        // vol + n
    Int dim_primitive;   // vol - 1
    Int dim_relative;    // vol
    long reducible_order;
    long irreducible_order;
    long table_total;
    long weight3_total;
    bool vol_equals_reducible_order;
    bool primitive_equals_table_total;
    bool weight3_equals_irreducible_order;
};
DimensionReport dimension_identities(const hypergeom::GammaList& g);

// interior lattice points of the Newton polytope at dilation 1 must match the
// table's top corner entry
bool geometric_genus_check(const hypergeom::GammaList& g);

struct RankLedgerItem {
    std::string name;
    long value;
    std::string source;
};
struct ChainReport {
    std::vector<RankLedgerItem> ranks;  // must all agree
    bool all_equal;
    std::string cokernel_note;
    long curve_side_order;   // order of the operator for the discriminant curve datum
    long curve_side_genus2;  // twice the genus of the plane closure
};
ChainReport rank_chain_report();

std::string table_json(const HodgeTable& t);

}  // namespace prymhg::hodge
