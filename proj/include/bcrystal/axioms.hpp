#ifndef BCRYSTAL_AXIOMS_HPP
#define BCRYSTAL_AXIOMS_HPP

#include <memory>
#include <string>
#include <vector>

#include "bcrystal/core.hpp"
#include "bcrystal/engine.hpp"

namespace bcrystal {

/// Abstract crystal the axiom checker runs against. The engine-backed view
/// is the normal case; tests wrap it to corrupt single edges.
class CrystalView {
public:
    virtual ~CrystalView() = default;
    virtual std::vector<Element> elements(int min_weight) = 0;
    virtual OptElement raise(const Element& x) = 0;   // e~
    virtual OptElement lower(const Element& x) = 0;   // f~
    virtual int weight(const Element& x) = 0;
    virtual int epsilon(const Element& x) = 0;
    virtual int phi(const Element& x) = 0;
    virtual int max_weight() const = 0;
    virtual std::string element_text(const Element& x) = 0;
};

class EngineView final : public CrystalView {
public:
    explicit EngineView(Engine& engine) : eng_(engine) {}
    std::vector<Element> elements(int min_weight) override { return eng_.enumerate(min_weight); }
    OptElement raise(const Element& x) override { return eng_.e_step(x); }
    OptElement lower(const Element& x) override { return eng_.f_step(x); }
    int weight(const Element& x) override { return eng_.weight(x); }
    int epsilon(const Element& x) override { return eng_.epsilon(x); }
    int phi(const Element& x) override { return eng_.phi(x); }
    int max_weight() const override { return eng_.expr().max_weight(eng_.expr().root()); }
    std::string element_text(const Element& x) override { return eng_.expr().element_text(x); }

private:
    Engine& eng_;
};

struct AxiomViolation {
    std::string axiom;    // "i", "ii", "iii", "iv", "v", "branch-facts"
    std::string element;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    int elements_checked = 0;

    bool ok() const { return violations.empty(); }
};

/// Verifies the defining axioms (i)-(v) on every element of the window.
/// Violations are data, not errors.
AxiomReport check_axioms(CrystalView& view, const WeightWindow& window);
AxiomReport check_axioms(const CrystalExpr& expr, const WeightWindow& window);

/// The branch-point facts: wt <= -2, the e~-chain above a branch point is
/// branch-free and dies exactly at -wt(b), and f~ never kills a branch
/// point (checked down to the window floor).
AxiomReport check_branch_facts(CrystalView& view, const WeightWindow& window);
AxiomReport check_branch_facts(const CrystalExpr& expr, const WeightWindow& window);

}  // namespace bcrystal

#endif
