#include <doctest.h>

#include "bcrystal/category_o.hpp"
#include "bcrystal/decomposer.hpp"
#include "bcrystal/parse.hpp"

using namespace bcrystal;

TEST_CASE("characters of single modules") {
    CHECK(character_at(single(T(0)), -2) == 2);
    CHECK(character_at(single(T(0)), 0) == 1);
    CHECK(character_at(single(V(3)), 5) == 0);
    CHECK(character_at(single(V(3)), 1) == 1);
    CHECK(character_at(single(M(-1)), -3) == 1);
    CHECK(character_at(direct_sum(single(M(2)), single(T(0))), -2) == 3);
}

TEST_CASE("module tensor worked examples") {
    CHECK(materialize(module_tensor(V(1), V(1)), -10).counts ==
          materialize(direct_sum(single(V(2)), single(V(0))), -10).counts);

    LabelMultiset m20 = materialize(module_tensor(M(2), M(0)), -12);
    CHECK(m20.counts.at(M(2)) == 1);
    CHECK(m20.counts.at(T(0)) == 1);
    CHECK(m20.counts.at(M(-4)) == 1);
    CHECK(m20.counts.at(M(-12)) == 1);
    CHECK(m20.counts.count(M(-2)) == 0);

    // V(2) (x) T(1): T(3), T(1) once, T(-1) = M(-1) twice
    LabelMultiset vt = materialize(module_tensor(V(2), T(1)), -10);
    CHECK(vt.counts.at(T(3)) == 1);
    CHECK(vt.counts.at(T(1)) == 1);
    CHECK(vt.counts.at(M(-1)) == 2);
}

TEST_CASE("crystal_of keeps labels") {
    CHECK(crystal_of(direct_sum(single(V(2)), single(T(0))), -10).counts ==
          materialize(direct_sum(single(V(2)), single(T(0))), -10).counts);
    LabelMultiset m = crystal_of(single(M(1)), -10);
    CHECK(m.total() == 1);
    CHECK(m.counts.at(M(1)) == 1);
}

TEST_CASE("module tensor matches the crystal decomposition") {
    const WeightWindow w{-30, -18};
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {M(0), V(1)}, {T(0), T(0)}, {M(2), Msigma(2)}, {V(2), M(-3)}}) {
        CAPTURE(to_string(a) + " (x) " + to_string(b));
        Decomposition dec =
            decompose(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)), w);
        CHECK(crystal_of(module_tensor(a, b), w.safe_weight) == dec.components);
    }
}

TEST_CASE("character multiplicativity") {
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {T(1), M(2)}, {M(-2), M(-3)}, {Msigma(2), T(0)}, {V(3), T(2)}}) {
        const ModuleSum m = module_tensor(a, b);
        for (int w = -24; w <= a.param + b.param; ++w) {
            CAPTURE(to_string(a) + " (x) " + to_string(b) + " at " + std::to_string(w));
            CHECK(character_at(m, w) == tensor_character(a, b, w));
        }
    }
}

TEST_CASE("duality is termwise") {
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {T(1), M(2)}, {M(1), M(3)}, {V(2), T(1)}, {M(-2), Msigma(1)}}) {
        LabelMultiset lhs;
        for (const auto& [l, c] : materialize(module_tensor(a, b), -20).counts) {
            lhs.add(dual_label(l), c);
        }
        LabelMultiset rhs = materialize(module_tensor(dual_label(b), dual_label(a)), -20);
        CAPTURE(to_string(a) + " (x) " + to_string(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("character-difference route reproduces the closed forms") {
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {V(2), T(1)}, {T(0), T(0)}, {T(2), M(-1)}, {M(0), Msigma(0)}, {V(3), M(-2)}}) {
        REQUIRE(character_route_applies(a, b));
        CAPTURE(to_string(a) + " (x) " + to_string(b));
        CHECK(character_route_decomposition(a, b, -20) ==
              materialize(module_tensor(a, b), -20));
    }
    CHECK_FALSE(character_route_applies(V(1), V(1)));
    CHECK_FALSE(character_route_applies(M(2), M(0)));
    CHECK_FALSE(character_route_applies(V(2), Msigma(1)));
    CHECK_FALSE(character_route_applies(Msigma(1), Msigma(0)));
}

TEST_CASE("module expression grammar") {
    const ModuleSum m = parse_module_expr("M(2) (x) V(3)");
    CHECK(character_at(m, 5) == 1);
    const ModuleSum s = parse_module_expr("T(1) (+) V(0)");
    CHECK(character_at(s, 0) == 1);
    CHECK(character_at(s, 1) == 1);
    const ModuleSum d = parse_module_expr("dual(M(2))");
    CHECK(materialize(d, -10).counts.at(Msigma(2)) == 1);
    CHECK_THROWS_AS(parse_module_expr("(M(2) (+) M(0)) (x) V(1)"), ParseError);
}
