#include <doctest.h>

#include "bcrystal/case_tables.hpp"
#include "bcrystal/parse.hpp"
#include "bcrystal/verify.hpp"

using namespace bcrystal;

TEST_CASE("all sixteen ordered kind pairs are covered") {
    const Kind kinds[] = {Kind::V, Kind::M, Kind::T, Kind::Msigma};
    int seen[17] = {};
    for (Kind a : kinds) {
        for (Kind b : kinds) {
            const CaseTable& c = case_for(a, b);
            CHECK(c.left == a);
            CHECK(c.right == b);
            seen[c.case_id]++;
        }
    }
    for (int i = 1; i <= 16; ++i) CHECK(seen[i] == 1);
}

TEST_CASE("oracle worked examples") {
    const WeightWindow w{-40, -28};
    {
        auto dec = oracle_decompose(V(1), V(1), w);
        LabelMultiset expect;
        expect.add(V(2));
        expect.add(V(0));
        CHECK(dec.components == expect);
    }
    {
        auto dec = oracle_decompose(V(2), M(1), w);
        LabelMultiset expect;
        expect.add(M(3));
        expect.add(M(1));
        expect.add(M(-1));
        CHECK(dec.components == expect);
    }
    {
        // doubled components: T(1) (x) V(2) has two M(-1) strings
        auto dec = oracle_decompose(T(1), V(2), w);
        CHECK(dec.components.counts.at(M(-1)) == 2);
        CHECK(dec.components.counts.at(T(3)) == 1);
        CHECK(dec.components.counts.at(T(1)) == 1);
    }
}

TEST_CASE("oracle agrees with the engine on specific pairs") {
    const WeightWindow w{-34, -22};
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {M(2), Msigma(2)}, {T(1), V(2)}, {M(0), V(1)}, {Msigma(1), M(-2)},
             {V(3), T(2)}, {M(-1), V(2)}}) {
        CAPTURE(to_string(a) + " (x) " + to_string(b));
        Decomposition engine = decompose(
            CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)), w);
        Decomposition table = oracle_decompose(a, b, w);
        CHECK(compare(engine, table).empty());
    }
}

TEST_CASE("the printed range of case 12 line 2 names invalid labels") {
    // T(2) (x) Msigma(0): "0 <= p <= max{r,s}" reaches T(-2)
    OracleExpansion exp = oracle_expand(T(2), Msigma(0), {-30, -18});
    bool saw = false;
    for (const OracleAnomaly& a : exp.anomalies) {
        if (a.case_id == 12 && a.line_index == 2 && a.weight == -2) saw = true;
    }
    CHECK(saw);
}

TEST_CASE("half-integral component indices appear only when integral") {
    // V(2) (x) M(1): (r+s+1)/2 = 2 is integral, so M(-1) is present
    CHECK(oracle_decompose(V(2), M(1), {-30, -18}).components.counts.count(M(-1)) == 1);
    // V(1) (x) M(1): (r+s+1)/2 = 3/2 is not
    CHECK(oracle_decompose(V(1), M(1), {-30, -18}).components.counts.count(M(-1)) == 0);
}

TEST_CASE("label-level commutativity of the tables on clean cases") {
    const WeightWindow w{-30, -18};
    // cases 14-16 and their transposes agree as multisets
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {V(2), V(3)}, {V(2), M(2)}, {V(1), T(2)}, {V(3), M(-2)}}) {
        CHECK(oracle_decompose(a, b, w).components == oracle_decompose(b, a, w).components);
    }
}

TEST_CASE("duality compatibility above the safe weight") {
    const WeightWindow w{-30, -18};
    for (auto [a, b] : std::initializer_list<std::pair<CrystalLabel, CrystalLabel>>{
             {V(2), M(1)}, {M(0), V(1)}, {V(1), T(2)}, {M(2), M(0)}}) {
        LabelMultiset lhs;
        for (const auto& [l, c] : oracle_decompose(a, b, w).components.counts) {
            lhs.add(dual_label(l), c);
        }
        const LabelMultiset rhs =
            oracle_decompose(dual_label(b), dual_label(a), w).components;
        CAPTURE(to_string(a) + " (x) " + to_string(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("errata json shape") {
    std::vector<ErrataEntry> errata;
    SuiteResult r = verify_cases(0, 1, {-30, -18}, &errata);
    CHECK(r.passed());
    const std::string text = errata_to_json(errata);
    CHECK(text.find("caseId") != std::string::npos);
}
