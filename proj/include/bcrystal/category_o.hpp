#ifndef BCRYSTAL_CATEGORY_O_HPP
#define BCRYSTAL_CATEGORY_O_HPP

#include <optional>
#include <vector>

#include "bcrystal/decomposer.hpp"

namespace bcrystal {

/// One generator of a (possibly infinite) direct sum of indecomposables:
/// mult copies of kind(c - 2p) for every integer p in [lo_p, hi_p].
struct GenLine {
    Kind kind;
    int c;
    long lo_p;
    std::optional<long> hi_p;  // nullopt = infinite family
    int mult;
};

/// An object of category O presented as a direct sum of indecomposable
/// module labels; infinite tails are kept in closed form.
struct ModuleSum {
    std::vector<GenLine> lines;
};

ModuleSum single(CrystalLabel l);
ModuleSum direct_sum(ModuleSum a, const ModuleSum& b);

/// Restricted dual, applied termwise (exact contravariant functor).
ModuleSum dual_sum(const ModuleSum& m);

/// The decomposition of a (x) b into indecomposables. Pairs not listed
/// directly in the closed forms are reached through commutativity and
/// duality.
ModuleSum module_tensor(CrystalLabel a, CrystalLabel b);

/// Labels with parameter >= safe_weight, counted with multiplicity.
LabelMultiset materialize(const ModuleSum& m, int safe_weight);

/// The branched crystal of a module sum, as a label multiset: the map is
/// label-preserving, so this is materialization under the shared alphabet.
LabelMultiset crystal_of(const ModuleSum& m, int safe_weight);

/// Pointwise weight-space dimension of a module sum.
class Character {
public:
    explicit Character(ModuleSum m) : sum_(std::move(m)) {}
    int eval(int w) const;

private:
    ModuleSum sum_;
};

Character character(const ModuleSum& m);
int character_at(const ModuleSum& m, int w);

/// dim of (a (x) b) at weight w: the convolution of the factor characters.
int tensor_character(CrystalLabel a, CrystalLabel b, int w);

/// Whether the character-difference route applies: the product must have
/// no V and no dual-Verma components (f acts freely on it and its dual).
bool character_route_applies(CrystalLabel a, CrystalLabel b);

/// Independent route to the decomposition of a (x) b: T-multiplicities
/// from first differences of the product character, M-multiplicities from
/// the printed correction formula. Only meaningful where
/// character_route_applies.
LabelMultiset character_route_decomposition(CrystalLabel a, CrystalLabel b, int safe_weight);

}  // namespace bcrystal

#endif
