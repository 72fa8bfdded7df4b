#include <doctest.h>

#include "bcrystal/engine.hpp"
#include "bcrystal/parse.hpp"

using namespace bcrystal;

namespace {

struct Pair {
    CrystalExpr expr;
    Element x;
    Engine eng;
    explicit Pair(const std::string& text)
        : expr(parse_element(text).first), x(parse_element(text).second), eng(expr) {}
};

}  // namespace

TEST_CASE("f-rule selection") {
    CHECK(Pair("V(1):b0 (x) V(1):b0").eng.f_rule(parse_element("V(1):b0 (x) V(1):b0").second) ==
          RuleTag::F1);
    CHECK(Pair("V(1):b0 (x) V(1):b1").eng.f_rule(parse_element("V(1):b0 (x) V(1):b1").second) ==
          RuleTag::F2);
    CHECK(Pair("M(-2):b0 (x) V(1):b0").eng.f_rule(parse_element("M(-2):b0 (x) V(1):b0").second) ==
          RuleTag::F1);
    CHECK(Pair("M(0):b0 (x) V(1):b0").eng.f_rule(parse_element("M(0):b0 (x) V(1):b0").second) ==
          RuleTag::F1p);
}

TEST_CASE("f-step values") {
    Pair p1("V(1):b0 (x) V(1):b1");
    CHECK(p1.eng.f_step(p1.x) == std::nullopt);  // F2 with a dead left chain
    Pair p2("V(1):b0 (x) V(1):b0");
    CHECK(p2.expr.element_text(*p2.eng.f_step(p2.x)) == "V(1):b1 (x) V(1):b0");
    // F2 with phi(b) = 0 moves both factors
    Pair p3("M(0):b0 (x) V(1):b1");
    CHECK(p3.expr.element_text(*p3.eng.f_step(p3.x)) == "M(0):b1 (x) V(1):b1");
}

TEST_CASE("e-rule selection") {
    CHECK(Pair("V(1):b0 (x) V(1):b1").eng.e_rule(parse_element("V(1):b0 (x) V(1):b1").second) ==
          RuleTag::E1);
    CHECK(Pair("V(1):b0 (x) V(1):b0").eng.e_rule(parse_element("V(1):b0 (x) V(1):b0").second) ==
          RuleTag::E1);
    // phi(b) = -1 with eps(b) = 0 lands in E2'
    CHECK(Pair("M(-1):b0 (x) V(2):b2").eng.e_rule(parse_element("M(-1):b0 (x) V(2):b2").second) ==
          RuleTag::E2p);
    // a branch point on the left with nothing above a branch point on the
    // right lands in E2
    Pair p("T(0):b0 (x) V(1):b1");
    CHECK(p.eng.e_rule(p.x) == RuleTag::E2);
    CHECK(p.expr.element_text(*p.eng.e_step(p.x)) == "T(0):b(0) (x) V(1):b1");
}

TEST_CASE("e-step values") {
    Pair p1("V(1):b0 (x) V(1):b1");
    CHECK(p1.eng.e_step(p1.x) == std::nullopt);
    Pair p2("V(1):b1 (x) V(1):b0");
    CHECK(p2.expr.element_text(*p2.eng.e_step(p2.x)) == "V(1):b0 (x) V(1):b0");
    Pair p3("M(-1):b0 (x) V(2):b2");  // E2' moves both factors
    CHECK(p3.expr.element_text(*p3.eng.e_step(p3.x)) == "M(-1):b1 (x) V(2):b0");
    // E2: the middle of the M(1) string inside M(0) (x) V(1)
    Pair p4("M(0):b1 (x) V(1):b1");
    CHECK(p4.eng.e_rule(p4.x) == RuleTag::E2);
    CHECK(p4.expr.element_text(*p4.eng.e_step(p4.x)) == "M(0):b0 (x) V(1):b1");
}

TEST_CASE("free-function pair interface") {
    auto v1 = CrystalExpr::atom(V(1));
    Element b0 = leaf_element(node(V(1), ChainTag::Plain, 0));
    Element b1 = leaf_element(node(V(1), ChainTag::Plain, 1));
    CHECK(f_rule(v1, v1, b0, b1) == RuleTag::F2);
    CHECK(tensor_f(v1, v1, b0, b1) == std::nullopt);
    CHECK(e_rule(v1, v1, b0, b1) == RuleTag::E1);
    CHECK(tensor_e(v1, v1, b1, b0) == Element{b0[0], b0[0]});
    CHECK(tensor_f(v1, v1, b0, b0) == Element{b1[0], b0[0]});
}

TEST_CASE("weight additivity and adjointness over a sweep") {
    for (const char* text : {"T(1) (x) V(2)", "M(-2) (x) Msigma(1)", "T(0) (x) T(0)",
                             "(V(1) (x) T(1)) (x) M(0)"}) {
        auto expr = parse_expr(text);
        Engine eng(expr);
        const int root = expr.root();
        const int L = expr.left(root), R = expr.right(root);
        const int nl = expr.leaf_count(L);
        for (const Element& x : eng.enumerate(-14)) {
            CHECK(eng.weight_n(root, x.data()) ==
                  eng.weight_n(L, x.data()) + eng.weight_n(R, x.data() + nl));
            auto down = eng.f_step(x);
            if (down) {
                auto back = eng.e_step(*down);
                REQUIRE(back);
                CHECK(*back == x);
            }
            // exactly one f-rule holds
            const RuleInfo info = eng.rules(x);
            CHECK(int(info.f1) + int(info.f1p) + int(info.f2) == 1);
        }
    }
}

TEST_CASE("rule instrumentation observes overlaps") {
    Pair p("V(1):b0 (x) V(1):b1");
    const RuleInfo info = p.eng.rules(p.x);
    CHECK(info.e1);
    CHECK(info.e_chosen == RuleTag::E1);
    CHECK(info.e_match_count() == 1);
    CHECK(info.f_chosen == RuleTag::F2);
}
