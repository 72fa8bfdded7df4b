#include "bcrystal/io.hpp"

#include <json.hpp>
#include <sstream>

namespace bcrystal {

using nlohmann::json;

namespace {

json dec_to_json_obj(const Decomposition& dec, const CrystalExpr* expr) {
    json components = json::array();
    for (const auto& [l, c] : dec.components.counts) {
        components.push_back({{"label", to_string(l)}, {"multiplicity", c}});
    }
    json reports = json::array();
    for (const ComponentReport& rep : dec.reports) {
        json r{{"label", to_string(rep.label)}};
        r["head"] = expr ? expr->element_text(rep.head) : "";
        r["branch"] = rep.branch && expr ? json(expr->element_text(*rep.branch)) : json(nullptr);
        reports.push_back(std::move(r));
    }
    return json{{"expr", dec.expr_text},
                {"window", {{"min", dec.window.min_weight}, {"safe", dec.window.safe_weight}}},
                {"components", std::move(components)},
                {"reports", std::move(reports)}};
}

}  // namespace

std::string decomposition_to_json(const Decomposition& dec, const CrystalExpr& expr, int indent) {
    return dec_to_json_obj(dec, &expr).dump(indent) + "\n";
}

std::string rerender_decomposition_json(const std::string& json_text, int indent) {
    return json::parse(json_text).dump(indent) + "\n";
}

std::string decomposition_to_table(const Decomposition& dec, const CrystalExpr& expr) {
    std::ostringstream out;
    out << dec.expr_text << ", wt >= " << dec.window.min_weight << ", reported down to "
        << dec.window.safe_weight << "\n";
    for (const auto& [l, c] : dec.components.counts) {
        out << "  " << to_string(l) << "  x" << c << "\n";
    }
    for (const ComponentReport& rep : dec.reports) {
        out << "  " << to_string(rep.label) << "  head " << expr.element_text(rep.head);
        if (rep.branch) out << "  branch " << expr.element_text(*rep.branch);
        out << "  (" << rep.elements_seen << " elements)\n";
    }
    return out.str();
}

std::string decomposition_to_table(const Decomposition& dec) {
    std::ostringstream out;
    out << dec.expr_text << ", reported down to " << dec.window.safe_weight << "\n";
    for (const auto& [l, c] : dec.components.counts) {
        out << "  " << to_string(l) << "  x" << c << "\n";
    }
    return out.str();
}

std::string crystal_to_dot(Engine& eng, const WeightWindow& window) {
    const CrystalExpr& expr = eng.expr();
    const int root = expr.root();
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    out << "  label=\"" << expr.text() << ", wt >= " << window.min_weight << "\";\n";
    out << "  node [shape=ellipse];\n";
    const auto elems = eng.enumerate(window.min_weight);
    for (const Element& x : elems) {
        out << "  \"" << expr.element_text(x) << "\"";
        if (eng.is_branch_point_n(root, x.data())) out << " [peripheries=2]";
        out << ";\n";
    }
    Element next;
    for (const Element& x : elems) {
        if (eng.f_step_n(root, x.data(), next) &&
            eng.weight_n(root, next.data()) >= window.min_weight) {
            out << "  \"" << expr.element_text(x) << "\" -> \"" << expr.element_text(next)
                << "\";\n";
        }
        if (eng.is_branch_point_n(root, x.data()) && eng.e_step_n(root, x.data(), next)) {
            out << "  \"" << expr.element_text(x) << "\" -> \"" << expr.element_text(next)
                << "\" [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace bcrystal
