#ifndef BCRYSTAL_DECOMPOSER_HPP
#define BCRYSTAL_DECOMPOSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcrystal/core.hpp"
#include "bcrystal/engine.hpp"

namespace bcrystal {

/// One indecomposable component found in a window: its canonical label,
/// the unique element with e~-image zero, and the branch point when the
/// label is T or Msigma.
struct ComponentReport {
    CrystalLabel label;
    Element head;
    std::optional<Element> branch;
    int elements_seen = 0;
};

struct LabelOrder {
    bool operator()(const CrystalLabel& a, const CrystalLabel& b) const {
        if (a.param != b.param) return a.param > b.param;
        return a.kind < b.kind;
    }
};

/// Label multiset ordered by (weight desc, kind) for deterministic output.
struct LabelMultiset {
    std::map<CrystalLabel, int, LabelOrder> counts;

    void add(CrystalLabel l, int mult = 1);
    int total() const;
    bool operator==(const LabelMultiset&) const = default;
};

struct Decomposition {
    std::string expr_text;
    WeightWindow window;
    LabelMultiset components;           // labels of reports with head weight >= safe
    std::vector<ComponentReport> reports;
};

struct DiffEntry {
    CrystalLabel label;
    int left_count = 0;
    int right_count = 0;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    bool empty() const { return entries.empty(); }
};

/// All elements of the carrier with weight >= window.min_weight, in
/// element order.
std::vector<Element> enumerate(const CrystalExpr& expr, const WeightWindow& window);

/// e~^epsilon(x): a branch point or an element with e~-image zero.
Element head_of(const CrystalExpr& expr, const Element& x);

/// Partitions the window into indecomposable components and classifies
/// each one. Throws WindowExhausted when a reported component cannot be
/// classified inside the window.
Decomposition decompose(const CrystalExpr& expr, const WeightWindow& window);
Decomposition decompose(Engine& engine, const WeightWindow& window);

/// Multiset difference above safe_weight; windows must agree.
DiffReport compare(const Decomposition& dec, const Decomposition& oracle);

/// Weight multiplicity of one canonical crystal at weight w.
int label_character(CrystalLabel l, int w);

/// Checks that, at every weight in [safe, top], the enumerated element
/// count equals the summed characters of the reported components.
/// Returns the weights where it fails.
std::vector<int> character_conservation_failures(Engine& engine, const Decomposition& dec);

}  // namespace bcrystal

#endif
