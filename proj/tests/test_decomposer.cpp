#include <doctest.h>

#include <algorithm>
#include <set>

#include "bcrystal/case_tables.hpp"
#include "bcrystal/decomposer.hpp"
#include "bcrystal/parse.hpp"

using namespace bcrystal;

namespace {

LabelMultiset counts(std::initializer_list<std::pair<CrystalLabel, int>> items) {
    LabelMultiset m;
    for (const auto& [l, c] : items) m.add(l, c);
    return m;
}

}  // namespace

TEST_CASE("enumeration sizes") {
    CHECK(enumerate(CrystalExpr::atom(V(2)), {-10, -2}).size() == 3);
    CHECK(enumerate(CrystalExpr::atom(M(0)), {-6, -2}).size() == 4);
    // T(1) down to -5: b(0)..b(3) at 1,-1,-3,-5 plus b0, b1 at -3, -5
    CHECK(enumerate(CrystalExpr::atom(T(1)), {-5, -2}).size() == 6);
}

TEST_CASE("heads") {
    auto t2 = CrystalExpr::atom(T(2));
    CHECK(head_of(t2, leaf_element(node(T(2), ChainTag::Plain, 3))) ==
          leaf_element(node(T(2), ChainTag::Plain, 0)));
    auto v3 = CrystalExpr::atom(V(3));
    CHECK(head_of(v3, leaf_element(node(V(3), ChainTag::Plain, 2))) ==
          leaf_element(node(V(3), ChainTag::Plain, 0)));
    auto [expr, x] = parse_element("V(1):b1 (x) V(1):b1");
    CHECK(expr.element_text(head_of(expr, x)) == "V(1):b0 (x) V(1):b0");
}

TEST_CASE("micro decompositions") {
    const WeightWindow w{-40, -28};
    CHECK(decompose(parse_expr("V(1) (x) V(1)"), w).components ==
          counts({{V(2), 1}, {V(0), 1}}));
    CHECK(decompose(parse_expr("M(0) (x) V(1)"), w).components ==
          counts({{M(1), 1}, {M(-1), 1}}));

    LabelMultiset expected = counts({{M(2), 1}, {T(0), 1}});
    for (int k = -4; k >= -28; k -= 2) expected.add(M(k));
    CHECK(decompose(parse_expr("M(2) (x) M(0)"), w).components == expected);
}

TEST_CASE("component reports carry heads and branches") {
    Decomposition dec = decompose(parse_expr("M(2) (x) M(0)"), {-30, -20});
    REQUIRE(!dec.reports.empty());
    bool saw_t = false;
    for (const ComponentReport& rep : dec.reports) {
        if (rep.label.kind == Kind::T) {
            saw_t = true;
            REQUIRE(rep.branch.has_value());
            Engine eng(parse_expr("M(2) (x) M(0)"));
            CHECK(eng.weight(rep.head) == rep.label.param);
            CHECK(eng.weight(*rep.branch) == -rep.label.param - 2);
            CHECK(eng.e_step(rep.head) == std::nullopt);
        } else {
            CHECK(!rep.branch.has_value());
        }
    }
    CHECK(saw_t);
    // deterministic ordering by head weight, descending
    Engine eng(parse_expr("M(2) (x) M(0)"));
    for (std::size_t i = 1; i < dec.reports.size(); ++i) {
        CHECK(eng.weight(dec.reports[i - 1].head) >= eng.weight(dec.reports[i].head));
    }
}

TEST_CASE("dual-side branch components classify as Msigma") {
    // V(2) (x) Msigma(1): case 3/4 territory, contains Msigma components
    Decomposition dec = decompose(parse_expr("V(2) (x) Msigma(1)"), {-30, -18});
    bool saw_msigma = false;
    for (const auto& [l, c] : dec.components.counts) saw_msigma |= l.kind == Kind::Msigma;
    CHECK(saw_msigma);
}

TEST_CASE("compare") {
    const WeightWindow w{-40, -28};
    Decomposition a = decompose(parse_expr("T(1) (x) V(2)"), w);
    Decomposition b = oracle_decompose(T(1), V(2), w);
    CHECK(compare(a, b).empty());
    Decomposition c = oracle_decompose(T(1), V(2), {-40, -26});
    CHECK_THROWS_AS(compare(a, c), std::invalid_argument);

    Decomposition d = a;
    d.components.add(V(0), 1);
    DiffReport diff = compare(d, b);
    REQUIRE(diff.entries.size() == 1);
    CHECK(diff.entries[0].label == V(0));
    CHECK(diff.entries[0].left_count == 1);
    CHECK(diff.entries[0].right_count == 0);
}

TEST_CASE("window monotonicity") {
    for (const char* text : {"M(1) (x) M(2)", "T(1) (x) Msigma(2)", "M(-3) (x) T(0)"}) {
        auto expr = parse_expr(text);
        Decomposition small = decompose(expr, {-30, -18});
        Decomposition big = decompose(expr, {-44, -18});
        CHECK(small.components == big.components);
    }
}

TEST_CASE("character conservation") {
    for (const char* text : {"M(2) (x) M(0)", "T(1) (x) T(1)", "Msigma(2) (x) M(-3)"}) {
        Engine eng(parse_expr(text));
        Decomposition dec = decompose(eng, {-34, -20});
        CHECK(character_conservation_failures(eng, dec).empty());
    }
}

TEST_CASE("window exhaustion is an error, not a guess") {
    auto expr = parse_expr("V(20) (x) V(20)");
    CHECK_THROWS_AS(decompose(expr, {-30, -18}), WindowExhausted);
}

TEST_CASE("margin invariant is enforced") {
    CHECK_THROWS_AS(decompose(parse_expr("V(1) (x) V(1)"), WeightWindow{-10, -7}),
                    std::invalid_argument);
}

TEST_CASE("every element of a finite tensor lies in exactly one component") {
    // V(2) (x) V(3) is finite, so every component head sits above the safe
    // weight and the element counts must add up.
    auto expr = parse_expr("V(2) (x) V(3)");
    Engine eng(expr);
    Decomposition dec = decompose(eng, {-30, -18});
    int seen = 0;
    for (const ComponentReport& rep : dec.reports) seen += rep.elements_seen;
    CHECK(seen == static_cast<int>(eng.enumerate(-30).size()));
    CHECK(seen == 3 * 4);
}

TEST_CASE("each family has one head and at most one branch point") {
    for (CrystalLabel l : {V(3), M(2), M(-2), T(2), Msigma(2)}) {
        Engine eng(CrystalExpr::atom(l));
        int heads = 0, branches = 0;
        for (const Element& x : eng.enumerate(-20)) {
            if (!eng.e_step(x)) ++heads;
            if (eng.is_branch_point(x)) ++branches;
        }
        CAPTURE(to_string(l));
        CHECK(heads == 1);
        CHECK(branches == (l.kind == Kind::T || l.kind == Kind::Msigma ? 1 : 0));
    }
}

TEST_CASE("cyclic subcrystals intersect only by containment") {
    for (const char* text : {"T(1)", "M(0) (x) V(1)", "T(0) (x) V(2)"}) {
        auto expr = parse_expr(text);
        Engine eng(expr);
        const int floor = -12;
        const auto elems = eng.enumerate(floor);
        // B_b truncated to the window: every f^k e^s image with weight >= floor
        auto cyclic = [&](const Element& b) {
            std::set<Element> out;
            Element up = b;
            while (true) {
                Element cur = up;
                out.insert(cur);
                Element down;
                while (eng.weight(cur) - 2 >= floor && eng.f_step_n(expr.root(), cur.data(), down)) {
                    cur = down;
                    out.insert(cur);
                }
                Element next;
                if (!eng.e_step_n(expr.root(), up.data(), next)) break;
                up = next;
            }
            return out;
        };
        std::vector<std::set<Element>> sets;
        for (const Element& x : elems) sets.push_back(cyclic(x));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                std::vector<Element> common;
                std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                      sets[j].end(), std::back_inserter(common));
                if (common.empty()) continue;
                const bool i_in_j = std::includes(sets[j].begin(), sets[j].end(),
                                                  sets[i].begin(), sets[i].end());
                const bool j_in_i = std::includes(sets[i].begin(), sets[i].end(),
                                                  sets[j].begin(), sets[j].end());
                CAPTURE(text);
                CHECK((i_in_j || j_in_i));
            }
        }
    }
}

TEST_CASE("label characters") {
    CHECK(label_character(T(0), -2) == 2);
    CHECK(label_character(T(2), 2) == 1);
    CHECK(label_character(T(2), -4) == 2);
    CHECK(label_character(V(3), 5) == 0);
    CHECK(label_character(V(3), -3) == 1);
    CHECK(label_character(M(-1), -5) == 1);
    CHECK(label_character(Msigma(2), 0) == 1);
    CHECK(label_character(M(2), 1) == 0);
}
