// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run it from ctest (target: acceptance) or directly.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bcrystal/parse.hpp"
#include "bcrystal/verify.hpp"

using namespace bcrystal;

namespace {

int failed_criteria = 0;

void report(int criterion, const std::string& what, const std::vector<std::string>& failures) {
    if (failures.empty()) {
        std::cout << "PASS criterion " << criterion << ": " << what << "\n";
    } else {
        ++failed_criteria;
        std::cout << "FAIL criterion " << criterion << ": " << what << " ("
                  << failures.size() << " failures; first: " << failures.front() << ")\n";
    }
}

bool is_conservation(const std::string& failure) { return failure.rfind("[char] ", 0) == 0; }

std::vector<std::string> split_out_conservation(SuiteResult& r,
                                                std::vector<std::string>& conservation) {
    std::vector<std::string> rest;
    for (std::string& f : r.failures) {
        (is_conservation(f) ? conservation : rest).push_back(std::move(f));
    }
    return rest;
}

LabelMultiset expect(std::initializer_list<std::pair<CrystalLabel, int>> items) {
    LabelMultiset m;
    for (const auto& [l, c] : items) m.add(l, c);
    return m;
}

}  // namespace

int main() {
    const WeightWindow pair_window{-40, -28};
    std::vector<std::string> conservation;

    // 1. Definition axioms on atoms in [-5, 5], pairs in [0, 3] plus
    //    M(-3..-1), and nested triples; window floor -30.
    {
        SuiteResult r = verify_axioms(-5, 5, 30);
        report(1, "axiom suite, " + std::to_string(r.checks) + " crystals, zero violations",
               r.failures);
    }

    // 2. Case tables 1-16 over r,s in [0,5] (M down to -5), window -40 /
    //    safe -28; cases 14-16 exact, the rest up to recorded errata whose
    //    engine side conserves characters.
    std::vector<ErrataEntry> errata;
    {
        SuiteResult r = verify_cases(-5, 5, pair_window, &errata);
        std::vector<std::string> rest = split_out_conservation(r, conservation);
        for (const ErrataEntry& e : errata) {
            if (!e.engine_conserves) {
                rest.push_back("errata entry for case " + std::to_string(e.case_id) +
                               " where the engine violates conservation");
            }
        }
        std::ofstream out("acceptance_errata.json");
        out << errata_to_json(errata);
        report(2,
               "case-table reproduction, " + std::to_string(r.checks) + " pairs, " +
                   std::to_string(errata.size()) + " errata entries recorded",
               rest);
    }

    // 3. Commutativity over the same sweep.
    {
        SuiteResult r = verify_commutativity(-5, 5, pair_window);
        report(3, "commutativity, " + std::to_string(r.checks) + " unordered pairs", r.failures);
    }

    // 4. Associativity over all label triples with parameters in [0, 3].
    {
        SuiteResult r = verify_associativity(0, 3, 26);
        std::vector<std::string> rest = split_out_conservation(r, conservation);
        report(4, "associativity, " + std::to_string(r.checks) + " triples, both nestings", rest);
    }

    // 5. crystal_of(module_tensor) against the generic decomposition.
    {
        SuiteResult r = verify_thm36(-5, 5, pair_window);
        std::vector<std::string> rest = split_out_conservation(r, conservation);
        report(5, "module-side tensor decompositions match the crystal ones, " +
                      std::to_string(r.checks) + " pairs",
               rest);
    }

    // 6. Character conservation for every decomposition produced above.
    report(6, "character conservation across criteria 2-5", conservation);

    // 7. Predicate characterizations of branch points and e~-kernels.
    {
        SuiteResult r = verify_predicates(-5, 5, pair_window);
        for (const std::string& f : r.findings) std::cout << "  finding: " << f << "\n";
        report(7, "branch-point and kernel predicates, " + std::to_string(r.checks) +
                      " tensor elements",
               r.failures);
    }

    // 8. Frozen micro-examples.
    {
        std::vector<std::string> failures;
        auto check = [&failures, &pair_window](const char* text, const LabelMultiset& want) {
            const LabelMultiset got = decompose(parse_expr(text), pair_window).components;
            if (!(got == want)) failures.push_back(std::string(text) + " decomposed unexpectedly");
        };
        check("V(1) (x) V(1)", expect({{V(2), 1}, {V(0), 1}}));
        check("M(0) (x) V(1)", expect({{M(1), 1}, {M(-1), 1}}));
        LabelMultiset m20 = expect({{M(2), 1}, {T(0), 1}});
        for (int k = -4; k >= pair_window.safe_weight; k -= 2) m20.add(M(k));
        check("M(2) (x) M(0)", m20);
        report(8, "worked micro-examples", failures);
    }

    if (failed_criteria != 0) {
        std::cout << failed_criteria << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
