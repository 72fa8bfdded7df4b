#ifndef BCRYSTAL_VERIFY_HPP
#define BCRYSTAL_VERIFY_HPP

#include <string>
#include <vector>

#include "bcrystal/case_tables.hpp"
#include "bcrystal/category_o.hpp"
#include "bcrystal/decomposer.hpp"

namespace bcrystal {

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> findings;  // observations that are not failures

    bool passed() const { return failures.empty(); }
};

/// One engine/table disagreement (or a printed line naming an invalid
/// label), at one parameter point of the sweep. The engine result is
/// ground truth whenever it conserves characters.
struct ErrataEntry {
    int case_id = 0;
    int line_index = -1;              // first implicated line; -1 = label missing from table
    std::vector<int> lines;           // all lines contributing the label
    std::string left, right;          // the swept labels
    std::string label;                // disputed component (or invalid name)
    int table_mult = 0;
    int engine_mult = 0;
    bool engine_conserves = true;
};

/// The sweep of canonical labels used by the verification suites: V, T,
/// Msigma parameters in [max(lo,0), hi], M in [lo, hi].
std::vector<CrystalLabel> sweep_labels(int lo, int hi);

/// Definition axioms + branch-point facts over atoms, all label pairs,
/// and a few nested triples.
SuiteResult verify_axioms(int lo, int hi, int window_depth = 30);

/// Engine vs case tables over all ordered label pairs; collects errata.
/// Cases 14-16 must agree exactly; every engine decomposition must
/// conserve characters.
SuiteResult verify_cases(int lo, int hi, const WeightWindow& window,
                         std::vector<ErrataEntry>* errata = nullptr);

/// decompose(A (x) B) == decompose(B (x) A) over the pair sweep.
SuiteResult verify_commutativity(int lo, int hi, const WeightWindow& window);

/// decompose((A (x) B) (x) C) == decompose(A (x) (B (x) C)) over label
/// triples with parameters in [lo, hi] (all four kinds).
SuiteResult verify_associativity(int lo, int hi, int window_depth = 26);

/// crystal_of(module_tensor(a, b)) == decompose(B(a) (x) B(b)), plus the
/// character-difference route where it applies.
SuiteResult verify_thm36(int lo, int hi, const WeightWindow& window);

/// Per-element predicate characterizations over the pair sweep: the
/// branch-point and e~-kernel descriptions, the f-rule partition, and the
/// f~-survival of tensor branch points. Rule overlaps become findings.
SuiteResult verify_predicates(int lo, int hi, const WeightWindow& window);

std::string errata_to_json(const std::vector<ErrataEntry>& errata, int indent = 2);

}  // namespace bcrystal

#endif
