#include <doctest.h>

#include "bcrystal/axioms.hpp"
#include "bcrystal/parse.hpp"

using namespace bcrystal;

namespace {

/// Redirects f~ b_(r) of Msigma(r) to b_(0): a deliberately broken family.
class CorruptedView final : public CrystalView {
public:
    CorruptedView(Engine& eng, int r) : inner_(eng), r_(r) {}

    std::vector<Element> elements(int min_weight) override { return inner_.elements(min_weight); }
    OptElement raise(const Element& x) override { return inner_.raise(x); }
    OptElement lower(const Element& x) override {
        if (x[0].chain == ChainTag::Paren && x[0].index == r_) {
            return leaf_element(node(x[0].label, ChainTag::Paren, 0));
        }
        return inner_.lower(x);
    }
    int weight(const Element& x) override { return inner_.weight(x); }
    int epsilon(const Element& x) override { return inner_.epsilon(x); }
    int phi(const Element& x) override { return inner_.phi(x); }
    int max_weight() const override { return inner_.max_weight(); }
    std::string element_text(const Element& x) override { return inner_.element_text(x); }

private:
    EngineView inner_;
    int r_;
};

}  // namespace

TEST_CASE("canonical families satisfy the axioms") {
    const WeightWindow w{-20, -8};
    for (CrystalLabel l : {V(0), V(2), M(0), M(-1), M(-4), M(3), T(0), T(2), Msigma(0),
                           Msigma(2)}) {
        CAPTURE(to_string(l));
        AxiomReport rep = check_axioms(CrystalExpr::atom(l), w);
        CHECK(rep.ok());
        CHECK(check_branch_facts(CrystalExpr::atom(l), w).ok());
    }
}

TEST_CASE("T(2) passes in a deep window") {
    AxiomReport rep = check_axioms(CrystalExpr::atom(T(2)), WeightWindow{-20, -8});
    CHECK(rep.ok());
    CHECK(rep.elements_checked > 10);
}

TEST_CASE("a small tensor square passes exhaustively") {
    auto expr = parse_expr("V(2) (x) V(2)");
    Engine eng(expr);
    CHECK(eng.enumerate(-10).size() == 9);
    CHECK(check_axioms(expr, WeightWindow{-10, -4}).ok());
}

TEST_CASE("a corrupted family is reported") {
    Engine eng(CrystalExpr::atom(Msigma(2)));
    CorruptedView bad(eng, 2);
    AxiomReport rep = check_axioms(bad, WeightWindow{-12, -6});
    CHECK_FALSE(rep.ok());
    bool saw_ii = false;
    for (const auto& v : rep.violations) saw_ii |= v.axiom == "ii";
    CHECK(saw_ii);
}

TEST_CASE("branch facts hold on nested tensors") {
    auto expr = parse_expr("(T(1) (x) Msigma(1)) (x) M(0)");
    CHECK(check_axioms(expr, WeightWindow{-16, -8}).ok());
    CHECK(check_branch_facts(expr, WeightWindow{-16, -8}).ok());
}
