#ifndef BCRYSTAL_CASE_TABLES_HPP
#define BCRYSTAL_CASE_TABLES_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bcrystal/decomposer.hpp"

namespace bcrystal {

/// One factor subscript of a printed head: which chain, and the index as
/// an affine form cr*r + cs*s + cp*p + c0.
struct HeadPart {
    ChainTag chain;
    int cr, cs, cp, c0;
};

/// One generating element printed in a table line (b_X (x) b'_Y). A line's
/// multiplicity at a given p is the number of its printed heads that lie
/// in their carriers, so ranges clip themselves exactly the way the
/// printed elements do.
struct HeadSpec {
    HeadPart left, right;
};

/// One line of a tensor-decomposition case: a component family whose
/// weight is r+s-2p, a range for 2p, an optional guard, and the printed
/// heads. The single B(M(-1)) lines are encoded as T-lines pinned to
/// 2p = r+s+1.
struct OracleLine {
    Kind kind;
    std::function<bool(long, long)> guard;                 // null = unconditional
    std::function<long(long, long)> lo2p;                  // inclusive bound on 2p
    std::function<long(long, long)> hi2p;                  // null = unbounded
    std::vector<HeadSpec> heads;
};

struct CaseTable {
    int case_id;            // 1..16
    Kind left, right;
    bool r_is_left;         // whether the symbol r names the left factor's parameter
    std::vector<OracleLine> lines;
};

const CaseTable& case_for(Kind left, Kind right);
const std::vector<CaseTable>& all_cases();

/// A line expansion that names a label outside the four families (e.g. a
/// T of weight below -1); kept out of the multiset and surfaced for the
/// errata file.
struct OracleAnomaly {
    int case_id;
    int line_index;   // 1-based
    long p;
    Kind kind;
    int weight;
    int mult;
};

struct OracleExpansion {
    int case_id = 0;
    Decomposition dec;
    std::vector<OracleAnomaly> anomalies;
    /// which lines contributed each reported label (for errata attribution)
    std::map<CrystalLabel, std::vector<int>, LabelOrder> contributing_lines;
};

/// Closed-form decomposition of B(left) (x) B(right) per the printed case
/// tables, truncated at the window's safe weight.
OracleExpansion oracle_expand(CrystalLabel left, CrystalLabel right, const WeightWindow& window);
Decomposition oracle_decompose(CrystalLabel left, CrystalLabel right, const WeightWindow& window);

}  // namespace bcrystal

#endif
