#ifndef BCRYSTAL_ENGINE_HPP
#define BCRYSTAL_ENGINE_HPP

#include <unordered_map>
#include <vector>

#include "bcrystal/core.hpp"

namespace bcrystal {

/// Which clause of the tensor-product definition fired.
enum class RuleTag : std::uint8_t { F1, F1p, F2, E1, E1p, E2, E2p, Zero };

const char* rule_name(RuleTag t);

/// Instrumented rule evaluation for one pair b (x) b': the truth value of
/// every condition, so overlaps between the e-clauses stay observable.
struct RuleInfo {
    bool f1 = false, f1p = false, f2 = false;
    bool e1 = false, e1p = false, e2 = false, e2p = false;
    RuleTag f_chosen = RuleTag::F1;
    RuleTag e_chosen = RuleTag::Zero;

    int e_match_count() const { return int(e1) + int(e1p) + int(e2) + int(e2p); }
};

/// Structure maps for one crystal expression. All operations are pure in
/// the element; the engine only carries memo caches (epsilon, heads,
/// branch lookups), so one engine per thread gives safe concurrency.
class Engine {
public:
    explicit Engine(CrystalExpr expr);

    const CrystalExpr& expr() const { return expr_; }

    // -- structure maps on the whole expression (validate their input) --
    int weight(const Element& x);
    OptElement e_step(const Element& x);
    OptElement f_step(const Element& x);
    int epsilon(const Element& x);
    int phi(const Element& x);
    int psi(const Element& x);
    bool is_branch_point(const Element& x);
    bool above_branch_point(const Element& x);

    /// e~^epsilon(x): either a branch point or an element with e~ = 0.
    Element head_of(const Element& x);

    std::vector<Element> enumerate(int min_weight);
    std::vector<Element> enumerate_at(int w);

    /// Rule selection for the root pair; root must be a tensor.
    RuleTag f_rule(const Element& x);
    RuleTag e_rule(const Element& x);
    RuleInfo rules(const Element& x);

    // -- node-scoped versions (node ids from expr(); x points at the
    //    node's leaf span). Used by the decomposer and the checker. --
    int weight_n(int node, const CanonicalNode* x) const;
    bool e_step_n(int node, const CanonicalNode* x, Element& out);
    bool f_step_n(int node, const CanonicalNode* x, Element& out);
    int epsilon_n(int node, const CanonicalNode* x);
    int phi_n(int node, const CanonicalNode* x);
    int psi_n(int node, const CanonicalNode* x);
    bool is_branch_point_n(int node, const CanonicalNode* x);
    bool above_branch_point_n(int node, const CanonicalNode* x);
    const Element& head_of_n(int node, const CanonicalNode* x);
    std::vector<Element> enumerate_n(int node, int min_weight) const;
    std::vector<Element> enumerate_at_n(int node, int w) const;
    RuleInfo rules_n(int node, const CanonicalNode* x);

    /// e~ applied `count` times; false when the orbit hits zero first.
    bool e_iter_n(int node, const CanonicalNode* x, int count, Element& out);
    /// f~ applied `count` times.
    bool f_iter_n(int node, const CanonicalNode* x, int count, Element& out);

private:
    struct NodeStats {
        int eps = -1;                 // -1 = not computed
        std::int8_t branch = -1;      // -1 unknown, 0 no, 1 yes
        std::int8_t above = -1;
    };

    NodeStats& stats(int node, const CanonicalNode* x);
    int eps_cap(int node, const CanonicalNode* x) const;
    /// The branch point whose e~-chain tops out at head h, if any.
    const OptElement& branch_for_head(int node, const Element& h);

    CrystalExpr expr_;
    std::vector<std::unordered_map<Element, NodeStats, ElementHash>> stats_;
    std::vector<std::unordered_map<Element, Element, ElementHash>> heads_;
    std::vector<std::unordered_map<Element, OptElement, ElementHash>> branch_of_head_;
};

// One-shot convenience wrappers matching the operation names of the
// library surface; each builds a throwaway engine.
int weight(const CrystalExpr& e, const Element& x);
OptElement e_step(const CrystalExpr& e, const Element& x);
OptElement f_step(const CrystalExpr& e, const Element& x);
int epsilon(const CrystalExpr& e, const Element& x);
int phi(const CrystalExpr& e, const Element& x);
int psi(const CrystalExpr& e, const Element& x);
bool is_branch_point(const CrystalExpr& e, const Element& x);
bool above_branch_point(const CrystalExpr& e, const Element& x);

/// Rule selection for a pair of factor crystals; the (b, b') pair is given
/// by its two halves.
RuleTag f_rule(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
               const Element& bp);
RuleTag e_rule(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
               const Element& bp);
OptElement tensor_f(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
                    const Element& bp);
OptElement tensor_e(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
                    const Element& bp);

}  // namespace bcrystal

#endif
