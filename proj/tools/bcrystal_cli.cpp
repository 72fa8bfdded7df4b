#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bcrystal/axioms.hpp"
#include "bcrystal/case_tables.hpp"
#include "bcrystal/category_o.hpp"
#include "bcrystal/decomposer.hpp"
#include "bcrystal/engine.hpp"
#include "bcrystal/io.hpp"
#include "bcrystal/parse.hpp"
#include "bcrystal/verify.hpp"

using namespace bcrystal;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitWindow = 2;

std::map<std::string, std::string> read_config(const std::string& path = "bcrystal.conf") {
    std::map<std::string, std::string> conf;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        conf[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return conf;
}

struct CommonOpts {
    int window_depth = 40;
    int safe_margin = -1;  // -1 = per-expression default
    std::string format = "table";
};

WeightWindow make_window(const CommonOpts& o, int factors) {
    const int margin = o.safe_margin >= 0 ? o.safe_margin : default_margin(factors);
    if (o.window_depth <= margin) {
        throw std::invalid_argument("window depth must exceed the safe margin (" +
                                    std::to_string(o.window_depth) +
                                    " <= " + std::to_string(margin) + ")");
    }
    return window(-o.window_depth, margin, factors);
}

void add_common(CLI::App* cmd, CommonOpts& o, const std::map<std::string, std::string>& conf,
                bool with_format = true) {
    if (auto it = conf.find("window"); it != conf.end()) o.window_depth = std::stoi(it->second);
    if (auto it = conf.find("safe_margin"); it != conf.end()) o.safe_margin = std::stoi(it->second);
    cmd->add_option("--window", o.window_depth, "enumeration depth W (weights >= -W)")
        ->capture_default_str();
    cmd->add_option("--safe-margin", o.safe_margin,
                    "margin between the window floor and the reporting bound");
    if (with_format) {
        cmd->add_option("--format", o.format, "table|json|dot")
            ->check(CLI::IsMember({"table", "json", "dot"}));
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("range must look like 0..3");
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int print_suite(const SuiteResult& r) {
    for (const std::string& f : r.findings) std::cout << "finding: " << f << "\n";
    for (const std::string& f : r.failures) std::cout << "FAIL: " << f << "\n";
    std::cout << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks
              << " checks, " << r.failures.size() << " failures, " << r.findings.size()
              << " findings)" << std::endl;
    return r.passed() ? 0 : 1;
}

std::string rules_report(const std::string& pair_text, const std::string& format) {
    auto [expr, x] = parse_element(pair_text);
    Engine eng(expr);
    if (expr.is_atom(expr.root())) {
        throw ParseError("rules needs a tensor pair, got an atom element");
    }
    const RuleInfo info = eng.rules(x);
    const int root = expr.root();
    const int L = expr.left(root), R = expr.right(root);
    const CanonicalNode* bl = x.data();
    const CanonicalNode* br = x.data() + expr.leaf_count(L);
    const auto e = eng.e_step(x);
    const auto f = eng.f_step(x);

    if (format == "json") {
        nlohmann::json j{
            {"element", expr.element_text(x)},
            {"left",
             {{"wt", eng.weight_n(L, bl)},
              {"epsilon", eng.epsilon_n(L, bl)},
              {"phi", eng.phi_n(L, bl)},
              {"psi", eng.psi_n(L, bl)},
              {"branchPoint", eng.is_branch_point_n(L, bl)}}},
            {"right",
             {{"wt", eng.weight_n(R, br)},
              {"epsilon", eng.epsilon_n(R, br)},
              {"phi", eng.phi_n(R, br)},
              {"psi", eng.psi_n(R, br)},
              {"aboveBranchPoint", eng.above_branch_point_n(R, br)}}},
            {"conditions",
             {{"F1", info.f1},
              {"F1'", info.f1p},
              {"F2", info.f2},
              {"E1", info.e1},
              {"E1'", info.e1p},
              {"E2", info.e2},
              {"E2'", info.e2p}}},
            {"fRule", rule_name(info.f_chosen)},
            {"eRule", rule_name(info.e_chosen)},
            {"f", f ? nlohmann::json(expr.element_text(*f)) : nlohmann::json(nullptr)},
            {"e", e ? nlohmann::json(expr.element_text(*e)) : nlohmann::json(nullptr)}};
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << expr.element_text(x) << "\n";
    out << "  left:  wt " << eng.weight_n(L, bl) << "  eps " << eng.epsilon_n(L, bl) << "  phi "
        << eng.phi_n(L, bl) << "  psi " << eng.psi_n(L, bl)
        << (eng.is_branch_point_n(L, bl) ? "  [branch point]" : "") << "\n";
    out << "  right: wt " << eng.weight_n(R, br) << "  eps " << eng.epsilon_n(R, br) << "  phi "
        << eng.phi_n(R, br) << "  psi " << eng.psi_n(R, br)
        << (eng.above_branch_point_n(R, br) ? "  [above a branch point]" : "") << "\n";
    out << "  F1=" << info.f1 << " F1'=" << info.f1p << " F2=" << info.f2 << "  ->  f-rule "
        << rule_name(info.f_chosen) << "\n";
    out << "  E1=" << info.e1 << " E1'=" << info.e1p << " E2=" << info.e2 << " E2'=" << info.e2p
        << "  ->  e-rule " << rule_name(info.e_chosen) << "\n";
    out << "  f~ -> " << (f ? expr.element_text(*f) : "0") << "\n";
    out << "  e~ -> " << (e ? expr.element_text(*e) : "0") << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branched crystals for quantized sl2 category O"};
    app.require_subcommand(1);
    const auto conf = read_config();

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "decompose a tensor expression");
    std::string dec_expr;
    CommonOpts dec_opts;
    cmd_dec->add_option("expr", dec_expr, "crystal expression, e.g. \"V(1) (x) V(1)\"")
        ->required();
    add_common(cmd_dec, dec_opts, conf);

    // oracle
    auto* cmd_orc = app.add_subcommand("oracle", "closed-form decomposition of a label pair");
    std::string orc_expr;
    CommonOpts orc_opts;
    cmd_orc->add_option("expr", orc_expr, "label pair, e.g. \"V(1) (x) M(2)\"")->required();
    add_common(cmd_orc, orc_opts, conf);

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name, range_text = "0..3", errata_path = "errata.json";
    CommonOpts ver_opts;
    cmd_ver->add_option("suite", suite_name, "axioms|cases|comm|assoc|thm36|predicates")
        ->required()
        ->check(CLI::IsMember({"axioms", "cases", "comm", "assoc", "thm36", "predicates"}));
    cmd_ver->add_option("--range", range_text, "parameter range, e.g. 0..5")
        ->capture_default_str();
    cmd_ver->add_option("--errata-out", errata_path, "errata file written by the cases suite")
        ->capture_default_str();
    add_common(cmd_ver, ver_opts, conf, false);

    // character
    auto* cmd_chr = app.add_subcommand("character", "weight-space dimensions of a module sum");
    std::string chr_expr;
    int chr_min = -20;
    std::string chr_format = "table";
    cmd_chr->add_option("expr", chr_expr, "module expression, e.g. \"M(2) (x) V(3)\"")
        ->required();
    cmd_chr->add_option("--min", chr_min, "lowest weight printed")->capture_default_str();
    cmd_chr->add_option("--format", chr_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    // graph
    auto* cmd_gra = app.add_subcommand("graph", "DOT graph of a crystal");
    std::string gra_expr;
    CommonOpts gra_opts;
    cmd_gra->add_option("expr", gra_expr, "crystal expression")->required();
    add_common(cmd_gra, gra_opts, conf, false);

    // rules
    auto* cmd_rul = app.add_subcommand("rules", "tensor-rule conditions for one pair");
    std::string rul_elem;
    std::string rul_format = "table";
    cmd_rul->add_option("element", rul_elem, "pair element, e.g. \"V(1):b0 (x) V(1):b1\"")
        ->required();
    cmd_rul->add_option("--format", rul_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : 0;
    }

    try {
        if (*cmd_dec) {
            const CrystalExpr expr = parse_expr(dec_expr);
            Engine eng(expr);
            const WeightWindow w = make_window(dec_opts, expr.factor_count());
            const Decomposition dec = decompose(eng, w);
            if (dec_opts.format == "json") {
                std::cout << decomposition_to_json(dec, expr);
            } else if (dec_opts.format == "dot") {
                std::cout << crystal_to_dot(eng, w);
            } else {
                std::cout << decomposition_to_table(dec, expr);
            }
        } else if (*cmd_orc) {
            const CrystalExpr expr = parse_expr(orc_expr);
            if (expr.factor_count() != 2 || !expr.is_atom(expr.left(expr.root()))) {
                throw ParseError("oracle needs a plain label pair");
            }
            const CrystalLabel a = expr.atom_label(expr.left(expr.root()));
            const CrystalLabel b = expr.atom_label(expr.right(expr.root()));
            const WeightWindow w = make_window(orc_opts, 2);
            const OracleExpansion exp = oracle_expand(a, b, w);
            for (const OracleAnomaly& an : exp.anomalies) {
                std::cerr << "warning: case " << an.case_id << " line " << an.line_index
                          << " names invalid " << kind_name(an.kind) << "(" << an.weight << ")\n";
            }
            if (orc_opts.format == "json") {
                nlohmann::json components = nlohmann::json::array();
                for (const auto& [l, c] : exp.dec.components.counts) {
                    components.push_back({{"label", to_string(l)}, {"multiplicity", c}});
                }
                nlohmann::json j{{"expr", exp.dec.expr_text},
                                 {"case", exp.case_id},
                                 {"window",
                                  {{"min", w.min_weight}, {"safe", w.safe_weight}}},
                                 {"components", std::move(components)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "case " << exp.case_id << "\n"
                          << decomposition_to_table(exp.dec);
            }
        } else if (*cmd_ver) {
            const auto [lo, hi] = parse_range(range_text);
            SuiteResult result;
            if (suite_name == "axioms") {
                result = verify_axioms(lo, hi);
            } else if (suite_name == "cases") {
                std::vector<ErrataEntry> errata;
                const WeightWindow w = make_window(ver_opts, 2);
                result = verify_cases(lo, hi, w, &errata);
                std::ofstream out(errata_path);
                out << errata_to_json(errata);
                std::cout << "errata: " << errata.size() << " entries -> " << errata_path << "\n";
            } else if (suite_name == "comm") {
                result = verify_commutativity(lo, hi, make_window(ver_opts, 2));
            } else if (suite_name == "assoc") {
                result = verify_associativity(lo, hi, ver_opts.window_depth);
            } else if (suite_name == "thm36") {
                result = verify_thm36(lo, hi, make_window(ver_opts, 2));
            } else {
                result = verify_predicates(lo, hi, make_window(ver_opts, 2));
            }
            return print_suite(result);
        } else if (*cmd_chr) {
            const ModuleSum m = parse_module_expr(chr_expr);
            const Character chi = character(m);
            int top = chr_min;
            for (const auto& [l, c] : materialize(m, chr_min).counts) {
                top = std::max(top, l.param);
            }
            if (chr_format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (int w = top; w >= chr_min; --w) {
                    rows.push_back({{"wt", w}, {"dim", chi.eval(w)}});
                }
                std::cout << nlohmann::json{{"expr", chr_expr}, {"character", rows}}.dump(2)
                          << "\n";
            } else {
                std::cout << chr_expr << "\n";
                for (int w = top; w >= chr_min; --w) {
                    std::cout << "  wt " << w << ": " << chi.eval(w) << "\n";
                }
            }
        } else if (*cmd_gra) {
            const CrystalExpr expr = parse_expr(gra_expr);
            Engine eng(expr);
            // drawing needs no reporting margin, only the enumeration floor
            const WeightWindow w{-gra_opts.window_depth, -gra_opts.window_depth};
            std::cout << crystal_to_dot(eng, w);
        } else if (*cmd_rul) {
            std::cout << rules_report(rul_elem, rul_format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const WindowExhausted& e) {
        std::cerr << "window exhausted: " << e.what() << "\n";
        return kExitWindow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
