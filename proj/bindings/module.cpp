#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcrystal/axioms.hpp"
#include "bcrystal/case_tables.hpp"
#include "bcrystal/category_o.hpp"
#include "bcrystal/decomposer.hpp"
#include "bcrystal/engine.hpp"
#include "bcrystal/io.hpp"
#include "bcrystal/parse.hpp"
#include "bcrystal/verify.hpp"

namespace py = pybind11;
using namespace bcrystal;

namespace {

WeightWindow window_for(const CrystalExpr& expr, int depth, std::optional<int> margin) {
    return window(-depth, margin ? *margin : default_margin(expr.factor_count()),
                  expr.factor_count());
}

py::list components_list(const LabelMultiset& m) {
    py::list out;
    for (const auto& [l, c] : m.counts) {
        out.append(py::make_tuple(to_string(l), c));
    }
    return out;
}

py::dict decomposition_dict(const Decomposition& dec, const CrystalExpr& expr) {
    py::dict out;
    out["expr"] = dec.expr_text;
    out["window"] = py::dict(py::arg("min") = dec.window.min_weight,
                             py::arg("safe") = dec.window.safe_weight);
    out["components"] = components_list(dec.components);
    py::list reports;
    for (const ComponentReport& rep : dec.reports) {
        py::dict r;
        r["label"] = to_string(rep.label);
        r["head"] = expr.element_text(rep.head);
        r["branch"] = rep.branch ? py::object(py::str(expr.element_text(*rep.branch)))
                                 : py::object(py::none());
        r["elements_seen"] = rep.elements_seen;
        reports.append(std::move(r));
    }
    out["reports"] = reports;
    return out;
}

py::object opt_text(const CrystalExpr& expr, const OptElement& x) {
    if (!x) return py::none();
    return py::str(expr.element_text(*x));
}

py::dict suite_dict(const SuiteResult& r) {
    py::dict out;
    out["suite"] = r.name;
    out["passed"] = r.passed();
    out["checks"] = r.checks;
    out["failures"] = r.failures;
    out["findings"] = r.findings;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "branched crystals for quantized sl2 category O";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<WindowExhausted>(m, "WindowExhausted", PyExc_RuntimeError);

    m.def(
        "weight", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return weight(expr, x);
        },
        py::arg("element"));
    m.def(
        "epsilon", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return epsilon(expr, x);
        },
        py::arg("element"));
    m.def(
        "phi", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return phi(expr, x);
        },
        py::arg("element"));
    m.def(
        "psi", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return psi(expr, x);
        },
        py::arg("element"));
    m.def(
        "e_step", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return opt_text(expr, Engine(expr).e_step(x));
        },
        py::arg("element"), "e~ of an element, or None for zero");
    m.def(
        "f_step", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return opt_text(expr, Engine(expr).f_step(x));
        },
        py::arg("element"), "f~ of an element, or None for zero");
    m.def(
        "is_branch_point", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return is_branch_point(expr, x);
        },
        py::arg("element"));
    m.def(
        "above_branch_point", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            return above_branch_point(expr, x);
        },
        py::arg("element"));
    m.def(
        "head_of", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            Engine eng(expr);
            return expr.element_text(eng.head_of(x));
        },
        py::arg("element"));
    m.def(
        "rules", [](const std::string& elem) {
            auto [expr, x] = parse_element(elem);
            Engine eng(expr);
            const RuleInfo info = eng.rules(x);
            py::dict out;
            out["F1"] = info.f1;
            out["F1'"] = info.f1p;
            out["F2"] = info.f2;
            out["E1"] = info.e1;
            out["E1'"] = info.e1p;
            out["E2"] = info.e2;
            out["E2'"] = info.e2p;
            out["f_rule"] = rule_name(info.f_chosen);
            out["e_rule"] = rule_name(info.e_chosen);
            out["e"] = opt_text(expr, eng.e_step(x));
            out["f"] = opt_text(expr, eng.f_step(x));
            return out;
        },
        py::arg("element"), "tensor-rule conditions and steps for a pair element");

    m.def(
        "enumerate_elements", [](const std::string& expr_text, int min_weight) {
            const CrystalExpr expr = parse_expr(expr_text);
            Engine eng(expr);
            std::vector<std::string> out;
            for (const Element& x : eng.enumerate(min_weight)) {
                out.push_back(expr.element_text(x));
            }
            return out;
        },
        py::arg("expr"), py::arg("min_weight"));

    m.def(
        "decompose", [](const std::string& expr_text, int depth, std::optional<int> margin) {
            const CrystalExpr expr = parse_expr(expr_text);
            Engine eng(expr);
            const Decomposition dec = decompose(eng, window_for(expr, depth, margin));
            return decomposition_dict(dec, expr);
        },
        py::arg("expr"), py::arg("window") = 40, py::arg("safe_margin") = std::nullopt,
        "partition the window into components and classify them");

    m.def(
        "oracle_decompose", [](const std::string& left, const std::string& right, int depth,
                               std::optional<int> margin) {
            const CrystalLabel a = parse_label(left), b = parse_label(right);
            const WeightWindow w =
                window(-depth, margin ? *margin : default_margin(2), 2);
            const OracleExpansion exp = oracle_expand(a, b, w);
            py::dict out;
            out["case"] = exp.case_id;
            out["components"] = components_list(exp.dec.components);
            py::list anomalies;
            for (const OracleAnomaly& an : exp.anomalies) {
                anomalies.append(py::dict(
                    py::arg("line") = an.line_index,
                    py::arg("label") =
                        std::string(kind_name(an.kind)) + "(" + std::to_string(an.weight) + ")",
                    py::arg("multiplicity") = an.mult));
            }
            out["anomalies"] = anomalies;
            return out;
        },
        py::arg("left"), py::arg("right"), py::arg("window") = 40,
        py::arg("safe_margin") = std::nullopt, "closed-form case-table decomposition");

    m.def(
        "module_tensor", [](const std::string& left, const std::string& right, int safe_weight) {
            return components_list(
                materialize(module_tensor(parse_label(left), parse_label(right)), safe_weight));
        },
        py::arg("left"), py::arg("right"), py::arg("safe_weight") = -26,
        "decomposition of the module tensor product, down to safe_weight");

    m.def(
        "character", [](const std::string& module_expr, int w) {
            return character_at(parse_module_expr(module_expr), w);
        },
        py::arg("module_expr"), py::arg("weight"),
        "weight-space dimension of a module expression");

    m.def(
        "dual", [](const std::string& l) { return to_string(dual_label(parse_label(l))); },
        py::arg("label"));

    m.def(
        "check_axioms", [](const std::string& expr_text, int min_weight) {
            const CrystalExpr expr = parse_expr(expr_text);
            AxiomReport rep = check_axioms(expr, WeightWindow{min_weight, min_weight});
            py::list out;
            for (const AxiomViolation& v : rep.violations) {
                out.append(py::dict(py::arg("axiom") = v.axiom, py::arg("element") = v.element,
                                    py::arg("detail") = v.detail));
            }
            return out;
        },
        py::arg("expr"), py::arg("min_weight") = -30,
        "violations of the defining axioms in the window (empty = pass)");

    m.def(
        "graph_dot", [](const std::string& expr_text, int depth) {
            const CrystalExpr expr = parse_expr(expr_text);
            Engine eng(expr);
            return crystal_to_dot(eng, WeightWindow{-depth, -depth});
        },
        py::arg("expr"), py::arg("window") = 20, "DOT rendering of the crystal graph");

    m.def(
        "verify", [](const std::string& suite, int lo, int hi) {
            if (suite == "axioms") return suite_dict(verify_axioms(lo, hi));
            const WeightWindow w{-40, -28};
            if (suite == "cases") {
                std::vector<ErrataEntry> errata;
                SuiteResult r = verify_cases(lo, hi, w, &errata);
                py::dict out = suite_dict(r);
                out["errata"] = errata.size();
                return out;
            }
            if (suite == "comm") return suite_dict(verify_commutativity(lo, hi, w));
            if (suite == "assoc") return suite_dict(verify_associativity(lo, hi));
            if (suite == "thm36") return suite_dict(verify_thm36(lo, hi, w));
            if (suite == "predicates") return suite_dict(verify_predicates(lo, hi, w));
            throw ParseError("unknown suite: " + suite);
        },
        py::arg("suite"), py::arg("lo") = 0, py::arg("hi") = 3,
        "run one verification suite (axioms|cases|comm|assoc|thm36|predicates)");
}
