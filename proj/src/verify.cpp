#include "bcrystal/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

#include "bcrystal/axioms.hpp"

namespace bcrystal {

namespace {

std::string pair_name(CrystalLabel a, CrystalLabel b) {
    return to_string(a) + " (x) " + to_string(b);
}

std::string multiset_text(const LabelMultiset& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [l, c] : m.counts) {
        if (!first) out += ", ";
        first = false;
        out += to_string(l);
        if (c != 1) out += ":" + std::to_string(c);
    }
    return out + "}";
}

// component characters vs the convolution of factor characters
void check_conservation(SuiteResult& suite, const std::string& what,
                        const std::vector<CrystalLabel>& factors, const LabelMultiset& components,
                        const WeightWindow& window) {
    int top = 0;
    for (CrystalLabel f : factors) top += f.param;
    for (int w = window.safe_weight; w <= top; ++w) {
        long conv = 0;
        if (factors.size() == 2) {
            conv = tensor_character(factors[0], factors[1], w);
        } else {
            for (int u = w - factors[1].param - factors[2].param; u <= factors[0].param; ++u) {
                const int ca = label_character(factors[0], u);
                if (ca) conv += ca * tensor_character(factors[1], factors[2], w - u);
            }
        }
        long sum = 0;
        for (const auto& [l, c] : components.counts) sum += c * label_character(l, w);
        if (sum != conv) {
            suite.failures.push_back("[char] " + what + ": character mismatch at wt " + std::to_string(w) +
                                     " (components " + std::to_string(sum) + ", product " +
                                     std::to_string(conv) + ")");
            return;
        }
    }
}

}  // namespace

std::vector<CrystalLabel> sweep_labels(int lo, int hi) {
    std::vector<CrystalLabel> out;
    for (int p = std::max(lo, 0); p <= hi; ++p) out.push_back(V(p));
    for (int p = lo; p <= hi; ++p) out.push_back(M(p));
    for (int p = std::max(lo, 0); p <= hi; ++p) out.push_back(T(p));
    for (int p = std::max(lo, 0); p <= hi; ++p) out.push_back(Msigma(p));
    return out;
}

SuiteResult verify_axioms(int lo, int hi, int window_depth) {
    SuiteResult suite;
    suite.name = "axioms";
    const WeightWindow w{-window_depth, -window_depth + 12};

    auto run = [&suite, &w](const CrystalExpr& expr) {
        AxiomReport axioms = check_axioms(expr, w);
        AxiomReport branch = check_branch_facts(expr, w);
        suite.checks++;
        for (const AxiomViolation& v : axioms.violations) {
            suite.failures.push_back(expr.text() + ": axiom (" + v.axiom + ") at " + v.element +
                                     ": " + v.detail);
        }
        for (const AxiomViolation& v : branch.violations) {
            suite.failures.push_back(expr.text() + ": " + v.axiom + " at " + v.element + ": " +
                                     v.detail);
        }
    };

    for (CrystalLabel l : sweep_labels(lo, hi)) run(CrystalExpr::atom(l));

    const auto pair_labels = sweep_labels(std::max(lo, -3), std::min(hi, 3));
    for (CrystalLabel a : pair_labels) {
        for (CrystalLabel b : pair_labels) {
            run(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)));
        }
    }

    const std::vector<std::array<CrystalLabel, 3>> triples = {
        {V(1), T(1), Msigma(2)},
        {M(-2), T(0), V(2)},
        {T(1), Msigma(1), M(0)},
    };
    for (const auto& t : triples) {
        auto a = CrystalExpr::atom(t[0]), b = CrystalExpr::atom(t[1]), c = CrystalExpr::atom(t[2]);
        run(CrystalExpr::tensor(CrystalExpr::tensor(a, b), c));
        run(CrystalExpr::tensor(a, CrystalExpr::tensor(b, c)));
    }
    return suite;
}

SuiteResult verify_cases(int lo, int hi, const WeightWindow& window,
                         std::vector<ErrataEntry>* errata) {
    SuiteResult suite;
    suite.name = "cases";
    const auto labels = sweep_labels(lo, hi);
    for (CrystalLabel a : labels) {
        for (CrystalLabel b : labels) {
            suite.checks++;
            Engine eng(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)));
            const Decomposition dec = decompose(eng, window);

            const auto conserve = character_conservation_failures(eng, dec);
            const bool engine_ok = conserve.empty();
            if (!engine_ok) {
                suite.failures.push_back("[char] " + pair_name(a, b) + ": engine violates character " +
                                         "conservation at wt " + std::to_string(conserve[0]));
            }
            check_conservation(suite, pair_name(a, b), {a, b}, dec.components, window);

            const OracleExpansion oracle = oracle_expand(a, b, window);
            const DiffReport diff = compare(dec, oracle.dec);
            const bool prior_work = oracle.case_id >= 14;
            for (const DiffEntry& d : diff.entries) {
                if (prior_work) {
                    suite.failures.push_back(pair_name(a, b) + " (case " +
                                             std::to_string(oracle.case_id) + "): table gives " +
                                             std::to_string(d.right_count) + " x " +
                                             to_string(d.label) + ", engine " +
                                             std::to_string(d.left_count));
                    continue;
                }
                ErrataEntry e;
                e.case_id = oracle.case_id;
                auto it = oracle.contributing_lines.find(d.label);
                if (it != oracle.contributing_lines.end()) {
                    e.lines = it->second;
                    e.line_index = e.lines.front();
                }
                e.left = to_string(a);
                e.right = to_string(b);
                e.label = to_string(d.label);
                e.table_mult = d.right_count;
                e.engine_mult = d.left_count;
                e.engine_conserves = engine_ok;
                if (errata) errata->push_back(e);
                suite.findings.push_back(pair_name(a, b) + " (case " +
                                         std::to_string(e.case_id) + ", line " +
                                         std::to_string(e.line_index) + "): table " +
                                         std::to_string(e.table_mult) + " x " + e.label +
                                         ", engine " + std::to_string(e.engine_mult));
            }
            for (const OracleAnomaly& an : oracle.anomalies) {
                const std::string bad =
                    std::string(kind_name(an.kind)) + "(" + std::to_string(an.weight) + ")";
                if (prior_work) {
                    suite.failures.push_back(pair_name(a, b) + ": table names invalid " + bad);
                    continue;
                }
                ErrataEntry e;
                e.case_id = an.case_id;
                e.line_index = an.line_index;
                e.lines = {an.line_index};
                e.left = to_string(a);
                e.right = to_string(b);
                e.label = bad;
                e.table_mult = an.mult;
                e.engine_mult = 0;
                e.engine_conserves = engine_ok;
                if (errata) errata->push_back(e);
                suite.findings.push_back(pair_name(a, b) + " (case " + std::to_string(e.case_id) +
                                         ", line " + std::to_string(e.line_index) +
                                         "): table names invalid " + bad);
            }
        }
    }
    return suite;
}

SuiteResult verify_commutativity(int lo, int hi, const WeightWindow& window) {
    SuiteResult suite;
    suite.name = "comm";
    const auto labels = sweep_labels(lo, hi);
    std::map<std::pair<CrystalLabel, CrystalLabel>, LabelMultiset> memo;
    auto components = [&](CrystalLabel a, CrystalLabel b) -> const LabelMultiset& {
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Decomposition dec =
            decompose(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)), window);
        return memo.emplace(key, std::move(dec.components)).first->second;
    };
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i; j < labels.size(); ++j) {
            suite.checks++;
            const LabelMultiset& ab = components(labels[i], labels[j]);
            const LabelMultiset& ba = components(labels[j], labels[i]);
            if (!(ab == ba)) {
                suite.failures.push_back(pair_name(labels[i], labels[j]) + " vs swapped: " +
                                         multiset_text(ab) + " != " + multiset_text(ba));
            }
        }
    }
    return suite;
}

SuiteResult verify_associativity(int lo, int hi, int window_depth) {
    SuiteResult suite;
    suite.name = "assoc";
    const auto labels = sweep_labels(std::max(lo, 0), hi);
    const WeightWindow w = window(-window_depth, default_margin(3), 3);
    for (CrystalLabel a : labels) {
        const auto ea = CrystalExpr::atom(a);
        for (CrystalLabel b : labels) {
            const auto eb = CrystalExpr::atom(b);
            const auto left_pair = CrystalExpr::tensor(ea, eb);
            for (CrystalLabel c : labels) {
                suite.checks++;
                const auto ec = CrystalExpr::atom(c);
                Decomposition d1 = decompose(CrystalExpr::tensor(left_pair, ec), w);
                Decomposition d2 = decompose(CrystalExpr::tensor(ea, CrystalExpr::tensor(eb, ec)), w);
                if (!(d1.components == d2.components)) {
                    suite.failures.push_back("(" + to_string(a) + " (x) " + to_string(b) +
                                             ") (x) " + to_string(c) + ": " +
                                             multiset_text(d1.components) + " != " +
                                             multiset_text(d2.components));
                }
                check_conservation(suite, d1.expr_text, {a, b, c}, d1.components, w);
            }
        }
    }
    return suite;
}

SuiteResult verify_thm36(int lo, int hi, const WeightWindow& window) {
    SuiteResult suite;
    suite.name = "thm36";
    const auto labels = sweep_labels(lo, hi);
    for (CrystalLabel a : labels) {
        for (CrystalLabel b : labels) {
            suite.checks++;
            const ModuleSum mod = module_tensor(a, b);
            const LabelMultiset from_modules = crystal_of(mod, window.safe_weight);
            Decomposition dec =
                decompose(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)), window);
            if (!(from_modules == dec.components)) {
                suite.failures.push_back(pair_name(a, b) + ": modules give " +
                                         multiset_text(from_modules) + ", crystals " +
                                         multiset_text(dec.components));
            }
            // module characters must match the product character
            int top = a.param + b.param;
            for (int w = window.safe_weight; w <= top; ++w) {
                if (character_at(mod, w) != tensor_character(a, b, w)) {
                    suite.failures.push_back("[char] " + pair_name(a, b) +
                                             ": module character mismatch at wt " +
                                             std::to_string(w));
                    break;
                }
            }
            // independent character-difference route
            if (character_route_applies(a, b)) {
                const LabelMultiset routed =
                    character_route_decomposition(a, b, window.safe_weight);
                if (!(routed == from_modules)) {
                    suite.failures.push_back(pair_name(a, b) + ": character route gives " +
                                             multiset_text(routed) + ", closed forms " +
                                             multiset_text(from_modules));
                }
            }
        }
    }
    return suite;
}

SuiteResult verify_predicates(int lo, int hi, const WeightWindow& window) {
    SuiteResult suite;
    suite.name = "predicates";
    const auto labels = sweep_labels(lo, hi);
    for (CrystalLabel a : labels) {
        for (CrystalLabel b : labels) {
            Engine eng(CrystalExpr::tensor(CrystalExpr::atom(a), CrystalExpr::atom(b)));
            const CrystalExpr& expr = eng.expr();
            const int root = expr.root();
            const int L = expr.left(root), R = expr.right(root);
            const int nl = expr.leaf_count(L);
            Element out;
            for (const Element& x : eng.enumerate(window.min_weight)) {
                suite.checks++;
                const CanonicalNode* bl = x.data();
                const CanonicalNode* br = x.data() + nl;
                const RuleInfo info = eng.rules_n(root, x.data());
                if (int(info.f1) + int(info.f1p) + int(info.f2) != 1) {
                    suite.failures.push_back(expr.element_text(x) + ": f-rules not a partition");
                }
                if (info.e_match_count() > 1) {
                    suite.findings.push_back(expr.element_text(x) + ": e-rule overlap (" +
                                             std::to_string(info.e_match_count()) + " match)");
                }
                const bool bpL = eng.is_branch_point_n(L, bl);
                const bool bpR = eng.is_branch_point_n(R, br);
                const int epsL = eng.epsilon_n(L, bl), epsR = eng.epsilon_n(R, br);
                const int wtL = eng.weight_n(L, bl), wtR = eng.weight_n(R, br);
                const int phiL = wtL + epsL, phiR = wtR + epsR;

                // e~(b (x) b') = 0 characterization
                const bool e_zero = !eng.e_step_n(root, x.data(), out);
                const bool predicted_zero = (epsL == 0 && !bpL && info.e1) ||
                                            (epsR == 0 && !bpR && info.e1p) ||
                                            info.e_match_count() == 0;
                if (e_zero != predicted_zero) {
                    suite.failures.push_back(expr.element_text(x) +
                                             ": e~-kernel characterization disagrees (e~ " +
                                             std::string(e_zero ? "0" : "nonzero") + ")");
                }
                if (e_zero && info.e_match_count() == 0 && !(epsL == 0 || phiL == -1)) {
                    suite.failures.push_back(expr.element_text(x) +
                                             ": kernel case (ii) without eps=0 or phi=-1");
                }

                // branch-point characterization, when e~ is nonzero
                if (!e_zero) {
                    const bool bp = eng.is_branch_point_n(root, x.data());
                    const bool predicted_bp = (bpR && info.e1p) || (bpL && info.e2) || info.e2p ||
                                              (phiL == -wtR - 2 && phiL >= 0 && phiR < -1);
                    if (bp != predicted_bp) {
                        suite.failures.push_back(expr.element_text(x) +
                                                 ": branch-point characterization disagrees");
                    }
                    if (bp) {  // branch points survive f~ all the way down
                        Element cur(x);
                        while (eng.weight_n(root, cur.data()) >= window.min_weight) {
                            if (!eng.f_step_n(root, cur.data(), out)) {
                                suite.failures.push_back(expr.element_text(x) +
                                                         ": f~ kills a branch point");
                                break;
                            }
                            cur.swap(out);
                        }
                    }
                }

                // f~(b (x) b') = 0 exactly under F2 with a dead left chain
                const bool f_zero = !eng.f_step_n(root, x.data(), out);
                const bool predicted_f_zero =
                    info.f2 && phiL >= 0 && !eng.f_iter_n(L, bl, phiL + 1, out);
                if (f_zero != predicted_f_zero) {
                    suite.failures.push_back(expr.element_text(x) +
                                             ": f~-kernel characterization disagrees");
                }
            }
        }
    }
    return suite;
}

std::string errata_to_json(const std::vector<ErrataEntry>& errata, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ErrataEntry& e : errata) {
        arr.push_back({{"caseId", e.case_id},
                       {"lineIndex", e.line_index},
                       {"lines", e.lines},
                       {"params", {{"left", e.left}, {"right", e.right}}},
                       {"tableResult", {{"label", e.label}, {"multiplicity", e.table_mult}}},
                       {"engineResult", {{"label", e.label}, {"multiplicity", e.engine_mult}}},
                       {"engineConservesCharacter", e.engine_conserves}});
    }
    return arr.dump(indent) + "\n";
}

}  // namespace bcrystal
