#include "bcrystal/decomposer.hpp"

#include <algorithm>
#include <unordered_map>

namespace bcrystal {

void LabelMultiset::add(CrystalLabel l, int mult) {
    if (mult == 0) return;
    auto it = counts.find(l);
    if (it == counts.end()) {
        counts.emplace(l, mult);
    } else {
        it->second += mult;
        if (it->second == 0) counts.erase(it);
    }
}

int LabelMultiset::total() const {
    int n = 0;
    for (const auto& [l, c] : counts) n += c;
    return n;
}

std::vector<Element> enumerate(const CrystalExpr& expr, const WeightWindow& window) {
    Engine eng(expr);
    return eng.enumerate(window.min_weight);
}

Element head_of(const CrystalExpr& expr, const Element& x) {
    Engine eng(expr);
    return eng.head_of(x);
}

Decomposition decompose(const CrystalExpr& expr, const WeightWindow& window) {
    Engine eng(expr);
    return decompose(eng, window);
}

Decomposition decompose(Engine& eng, const WeightWindow& window) {
    const CrystalExpr& expr = eng.expr();
    const int root = expr.root();
    if (window.margin() < 2 * expr.factor_count() + 2) {
        throw std::invalid_argument("window margin " + std::to_string(window.margin()) +
                                    " too small for " + std::to_string(expr.factor_count()) +
                                    " factors");
    }

    Decomposition dec;
    dec.expr_text = expr.text();
    dec.window = window;

    // Group every enumerated element by its head.
    std::unordered_map<Element, int, ElementHash> group_size;
    for (const Element& x : eng.enumerate(window.min_weight)) {
        group_size[eng.head_of_n(root, x.data())]++;
    }

    // Branch-point heads first: each absorbs the group of the e~-zero top
    // of its upper chain.
    std::unordered_map<Element, char, ElementHash> consumed;
    std::vector<std::pair<Element, ComponentReport>> found;  // keyed by head for ordering
    for (const auto& [head, size] : group_size) {
        if (!eng.is_branch_point_n(root, head.data())) continue;
        const int wa = eng.weight_n(root, head.data());
        const int param = -wa - 2;
        Element top;
        if (!eng.e_iter_n(root, head.data(), -wa - 1, top)) {
            throw std::logic_error("e~-chain above a branch point died early in " + expr.text());
        }
        Element fe;
        eng.e_step_n(root, head.data(), fe);
        Element after;
        const bool dual_side = !eng.f_step_n(root, fe.data(), after);
        ComponentReport rep;
        rep.label = label(dual_side ? Kind::Msigma : Kind::T, param);
        rep.head = top;
        rep.branch = head;
        rep.elements_seen = size;
        auto it = group_size.find(top);
        if (it != group_size.end()) {
            rep.elements_seen += it->second;
            consumed[top] = 1;
        }
        consumed[head] = 1;
        if (param >= window.safe_weight) found.emplace_back(top, std::move(rep));
    }

    // Remaining heads have e~-image zero and name M or V components.
    for (const auto& [head, size] : group_size) {
        if (consumed.count(head) || eng.is_branch_point_n(root, head.data())) continue;
        const int w = eng.weight_n(root, head.data());
        if (w < window.safe_weight) continue;
        ComponentReport rep;
        rep.head = head;
        rep.elements_seen = size;
        if (w >= 0) {
            if (-w - 2 < window.min_weight) {
                throw WindowExhausted("component with head weight " + std::to_string(w) +
                                      " cannot be classified: its decision weight " +
                                      std::to_string(-w - 2) + " lies below the window floor " +
                                      std::to_string(window.min_weight));
            }
            Element probe;
            rep.label = eng.f_iter_n(root, head.data(), w + 1, probe) ? label(Kind::M, w)
                                                                      : label(Kind::V, w);
        } else {
            rep.label = label(Kind::M, w);
        }
        found.emplace_back(head, std::move(rep));
    }

    std::sort(found.begin(), found.end(), [&eng, root](const auto& a, const auto& b) {
        const int wa = eng.weight_n(root, a.first.data());
        const int wb = eng.weight_n(root, b.first.data());
        if (wa != wb) return wa > wb;
        return a.first < b.first;
    });
    for (auto& [head, rep] : found) {
        dec.components.add(rep.label);
        dec.reports.push_back(std::move(rep));
    }
    return dec;
}

DiffReport compare(const Decomposition& dec, const Decomposition& oracle) {
    if (dec.window != oracle.window) {
        throw std::invalid_argument("compare needs identical windows");
    }
    DiffReport diff;
    auto keys = dec.components.counts;
    for (const auto& [l, c] : oracle.components.counts) keys.emplace(l, 0);
    for (const auto& [l, unused] : keys) {
        if (l.param < dec.window.safe_weight) continue;
        auto lit = dec.components.counts.find(l);
        auto rit = oracle.components.counts.find(l);
        const int lc = lit == dec.components.counts.end() ? 0 : lit->second;
        const int rc = rit == oracle.components.counts.end() ? 0 : rit->second;
        if (lc != rc) diff.entries.push_back({l, lc, rc});
    }
    return diff;
}

int label_character(CrystalLabel l, int w) {
    const int r = l.param;
    switch (l.kind) {
        case Kind::V: return (w <= r && w >= -r && (r - w) % 2 == 0) ? 1 : 0;
        case Kind::M:
        case Kind::Msigma: return (w <= r && (r - w) % 2 == 0) ? 1 : 0;
        case Kind::T:
            if ((r - w) % 2 != 0) return 0;
            if (w <= r && w >= -r) return 1;
            if (w <= -r - 2) return 2;
            return 0;
    }
    return 0;
}

std::vector<int> character_conservation_failures(Engine& eng, const Decomposition& dec) {
    const int root = eng.expr().root();
    const int top = eng.expr().max_weight(root);
    std::map<int, int> enumerated;
    for (const Element& x : eng.enumerate(dec.window.safe_weight)) {
        enumerated[eng.weight_n(root, x.data())]++;
    }
    std::vector<int> failures;
    for (int w = dec.window.safe_weight; w <= top; ++w) {
        int expected = 0;
        for (const auto& [l, c] : dec.components.counts) expected += c * label_character(l, w);
        auto it = enumerated.find(w);
        const int actual = it == enumerated.end() ? 0 : it->second;
        if (actual != expected) failures.push_back(w);
    }
    return failures;
}

}  // namespace bcrystal
