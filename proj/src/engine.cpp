#include "bcrystal/engine.hpp"

#include <algorithm>
#include <cassert>

namespace bcrystal {

const char* rule_name(RuleTag t) {
    switch (t) {
        case RuleTag::F1: return "F1";
        case RuleTag::F1p: return "F1'";
        case RuleTag::F2: return "F2";
        case RuleTag::E1: return "E1";
        case RuleTag::E1p: return "E1'";
        case RuleTag::E2: return "E2";
        case RuleTag::E2p: return "E2'";
        case RuleTag::Zero: return "Zero";
    }
    return "?";
}

Engine::Engine(CrystalExpr expr) : expr_(std::move(expr)) {
    stats_.resize(expr_.node_count());
    heads_.resize(expr_.node_count());
    branch_of_head_.resize(expr_.node_count());
}

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

namespace {

Element owned(const CanonicalNode* x, int count) { return Element(x, x + count); }

void emit_pair(Element& out, const Element& l, const Element& r) {
    out.clear();
    out.reserve(l.size() + r.size());
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
}

}  // namespace

int Engine::weight_n(int node, const CanonicalNode* x) const {
    int w = 0;
    const int n = expr_.leaf_count(node);
    for (int i = 0; i < n; ++i) w += atom::weight(x[i]);
    return w;
}

int Engine::eps_cap(int node, const CanonicalNode* x) const {
    return (expr_.max_weight(node) - weight_n(node, x)) / 2 + 2;
}

bool Engine::e_iter_n(int node, const CanonicalNode* x, int count, Element& out) {
    out = owned(x, expr_.leaf_count(node));
    Element tmp;
    for (int i = 0; i < count; ++i) {
        if (!e_step_n(node, out.data(), tmp)) return false;
        out.swap(tmp);
    }
    return true;
}

bool Engine::f_iter_n(int node, const CanonicalNode* x, int count, Element& out) {
    out = owned(x, expr_.leaf_count(node));
    Element tmp;
    for (int i = 0; i < count; ++i) {
        if (!f_step_n(node, out.data(), tmp)) return false;
        out.swap(tmp);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pair context: everything the tensor rules of one node need to know about
// the two halves of an element.
// ---------------------------------------------------------------------------

namespace {

struct PairCtx {
    Engine& eng;
    int L, R;
    const CanonicalNode* b;
    const CanonicalNode* bp;
    int wtL, wtR, epsL, epsR, phiL, phiR, psiR;

    PairCtx(Engine& e, const CrystalExpr& x, int node, const CanonicalNode* elem)
        : eng(e),
          L(x.left(node)),
          R(x.right(node)),
          b(elem),
          bp(elem + x.leaf_count(x.left(node))) {
        wtL = eng.weight_n(L, b);
        wtR = eng.weight_n(R, bp);
        epsL = eng.epsilon_n(L, b);
        epsR = eng.epsilon_n(R, bp);
        phiL = wtL + epsL;
        phiR = wtR + epsR;
        psiR = std::max(epsR, epsR - phiR - 1);
    }

    bool f_right_zero() {
        Element tmp;
        return !eng.f_step_n(R, bp, tmp);
    }
    bool e_left_zero() {
        Element tmp;
        return !eng.e_step_n(L, b, tmp);
    }
    // f~^{phi(b')+1} b' = 0 (only queried when phiR >= 0)
    bool f_kills_right_at_phi() {
        Element tmp;
        return !eng.f_iter_n(R, bp, phiR + 1, tmp);
    }

    bool cond_f1() { return phiL < 0 || psiR < phiL; }
    bool cond_f1p() { return phiL >= 0 && psiR >= phiL && !f_right_zero(); }
    bool cond_f2() { return phiL >= 0 && psiR >= phiL && f_right_zero(); }

    bool cond_e1() { return (wtL < phiL && phiL < -1) || psiR <= phiL; }
    bool cond_e1p() { return psiR > phiL && phiL >= 0; }
    bool cond_e2() {
        if (phiL == -1 && 0 <= phiR && phiR <= epsL - 1 && f_kills_right_at_phi()) return true;
        return eng.is_branch_point_n(L, b) && 0 <= phiR && phiR <= -wtL - 2 &&
               !eng.above_branch_point_n(R, bp);
    }
    bool cond_e2p() {
        if (!(-wtL - 1 <= phiR && phiR <= -wtL - 2 + epsR)) return false;
        if (phiL == -1 && !e_left_zero()) return true;
        return phiL < 0 && epsL == 0;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

bool Engine::e_step_n(int node, const CanonicalNode* x, Element& out) {
    if (expr_.is_atom(node)) {
        auto up = atom::raise(*x);
        if (!up) return false;
        out.assign(1, *up);
        return true;
    }
    PairCtx c(*this, expr_, node, x);
    const int nl = expr_.leaf_count(c.L);
    const int nr = expr_.leaf_count(c.R);
    Element l, r;
    if (c.cond_e1()) {
        if (!e_step_n(c.L, c.b, l)) return false;
        emit_pair(out, l, owned(c.bp, nr));
        return true;
    }
    if (c.cond_e1p()) {
        if (!e_step_n(c.R, c.bp, r)) return false;
        emit_pair(out, owned(c.b, nl), r);
        return true;
    }
    if (c.cond_e2()) {
        if (!e_iter_n(c.L, c.b, c.phiR + 1, l)) return false;
        if (!f_iter_n(c.R, c.bp, c.phiR, r)) return false;
        emit_pair(out, l, r);
        return true;
    }
    if (c.cond_e2p()) {
        const int steps = -c.wtL - c.wtR - 2;
        assert(steps >= 0);
        if (!f_iter_n(c.L, c.b, steps, l)) return false;
        if (!e_iter_n(c.R, c.bp, steps + 1, r)) return false;
        emit_pair(out, l, r);
        return true;
    }
    return false;
}

bool Engine::f_step_n(int node, const CanonicalNode* x, Element& out) {
    if (expr_.is_atom(node)) {
        auto down = atom::lower(*x);
        if (!down) return false;
        out.assign(1, *down);
        return true;
    }
    PairCtx c(*this, expr_, node, x);
    const int nl = expr_.leaf_count(c.L);
    const int nr = expr_.leaf_count(c.R);
    Element l, r;
    if (c.cond_f1()) {
        if (!f_step_n(c.L, c.b, l)) return false;
        emit_pair(out, l, owned(c.bp, nr));
        return true;
    }
    if (!c.f_right_zero()) {  // F1'
        if (!f_step_n(c.R, c.bp, r)) return false;
        emit_pair(out, owned(c.b, nl), r);
        return true;
    }
    // F2
    if (!f_iter_n(c.L, c.b, c.phiL + 1, l)) return false;
    if (!e_iter_n(c.R, c.bp, c.phiL, r)) return false;
    emit_pair(out, l, r);
    return true;
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

Engine::NodeStats& Engine::stats(int node, const CanonicalNode* x) {
    return stats_[node][owned(x, expr_.leaf_count(node))];
}

int Engine::epsilon_n(int node, const CanonicalNode* x) {
    if (expr_.is_atom(node)) return x->index;
    const int count = expr_.leaf_count(node);
    auto& memo = stats_[node];

    std::vector<Element> path;
    Element cur = owned(x, count);
    const int cap = eps_cap(node, x);
    int eps_tail = -1;
    while (true) {
        auto it = memo.find(cur);
        if (it != memo.end() && it->second.eps >= 0) {
            eps_tail = it->second.eps;
            break;
        }
        Element up, back;
        const bool has_up = e_step_n(node, cur.data(), up);
        if (!has_up || !f_step_n(node, up.data(), back) || back != cur) {
            memo[cur].eps = 0;
            eps_tail = 0;
            break;
        }
        path.push_back(std::move(cur));
        cur = std::move(up);
        if (static_cast<int>(path.size()) > cap) {
            throw EpsilonCapExceeded("epsilon iteration exceeded its cap of " +
                                     std::to_string(cap) + " in " + expr_.text());
        }
    }
    for (std::size_t i = path.size(); i-- > 0;) {
        ++eps_tail;
        memo[path[i]].eps = eps_tail;
    }
    return eps_tail;
}

int Engine::phi_n(int node, const CanonicalNode* x) {
    return weight_n(node, x) + epsilon_n(node, x);
}

int Engine::psi_n(int node, const CanonicalNode* x) {
    const int eps = epsilon_n(node, x);
    const int phi = weight_n(node, x) + eps;
    return std::max(eps, eps - phi - 1);
}

bool Engine::is_branch_point_n(int node, const CanonicalNode* x) {
    if (expr_.is_atom(node)) return atom::is_branch_point(*x);
    NodeStats& s = stats(node, x);
    if (s.branch < 0) {
        Element up, back;
        bool bp = false;
        if (e_step_n(node, x, up)) {
            bp = !f_step_n(node, up.data(), back) || back != owned(x, expr_.leaf_count(node));
        }
        s.branch = bp ? 1 : 0;
    }
    return s.branch == 1;
}

const Element& Engine::head_of_n(int node, const CanonicalNode* x) {
    const int count = expr_.leaf_count(node);
    auto& memo = heads_[node];

    std::vector<Element> path;
    Element cur = owned(x, count);
    const Element* head = nullptr;
    while (true) {
        auto it = memo.find(cur);
        if (it != memo.end()) {
            head = &it->second;
            break;
        }
        if (epsilon_n(node, cur.data()) == 0) {
            auto [pos, fresh] = memo.emplace(cur, cur);
            head = &pos->second;
            break;
        }
        Element up;
        e_step_n(node, cur.data(), up);  // nonzero: epsilon > 0
        path.push_back(std::move(cur));
        cur = std::move(up);
    }
    for (std::size_t i = path.size(); i-- > 0;) {
        auto [pos, fresh] = memo.emplace(std::move(path[i]), *head);
        head = &pos->second;
    }
    return *head;
}

const OptElement& Engine::branch_for_head(int node, const Element& h) {
    auto& memo = branch_of_head_[node];
    auto it = memo.find(h);
    if (it != memo.end()) return it->second;

    OptElement found;
    const int w = weight_n(node, h.data());
    if (w >= 0) {
        for (const Element& cand : enumerate_at_n(node, -w - 2)) {
            if (!is_branch_point_n(node, cand.data())) continue;
            Element top;
            if (e_iter_n(node, cand.data(), w + 1, top) && top == h) {
                found = cand;
                break;
            }
        }
    }
    return memo.emplace(h, std::move(found)).first->second;
}

bool Engine::above_branch_point_n(int node, const CanonicalNode* x) {
    if (expr_.is_atom(node)) return atom::above_branch_point(*x);
    NodeStats& s = stats(node, x);
    if (s.above >= 0) return s.above == 1;

    bool result = false;
    if (is_branch_point_n(node, x)) {
        result = true;
    } else {
        const Element& h = head_of_n(node, x);
        if (!is_branch_point_n(node, h.data())) {
            const int w = weight_n(node, h.data());
            if (w >= 0 && branch_for_head(node, h)) {
                result = epsilon_n(node, x) <= w;
            }
        }
    }
    // re-lookup: head/branch computations may have rehashed the map
    stats(node, x).above = result ? 1 : 0;
    return result;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<Element> Engine::enumerate_n(int node, int min_weight) const {
    std::vector<Element> out;
    if (expr_.is_atom(node)) {
        for (const CanonicalNode& n : atom::enumerate(expr_.atom_label(node), min_weight)) {
            out.push_back(leaf_element(n));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const int L = expr_.left(node), R = expr_.right(node);
    const auto left = enumerate_n(L, min_weight - expr_.max_weight(R));
    const auto right = enumerate_n(R, min_weight - expr_.max_weight(L));
    std::vector<int> rw(right.size());
    for (std::size_t j = 0; j < right.size(); ++j) rw[j] = weight_n(R, right[j].data());
    Element e;
    for (const Element& l : left) {
        const int wl = weight_n(L, l.data());
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (wl + rw[j] < min_weight) continue;
            emit_pair(e, l, right[j]);
            out.push_back(e);
        }
    }
    return out;  // lexicographic by construction
}

std::vector<Element> Engine::enumerate_at_n(int node, int w) const {
    std::vector<Element> out;
    if (expr_.is_atom(node)) {
        for (const CanonicalNode& n : atom::enumerate_at(expr_.atom_label(node), w)) {
            out.push_back(leaf_element(n));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const int L = expr_.left(node), R = expr_.right(node);
    Element e;
    for (int u = w - expr_.max_weight(R); u <= expr_.max_weight(L); ++u) {
        const auto left = enumerate_at_n(L, u);
        if (left.empty()) continue;
        const auto right = enumerate_at_n(R, w - u);
        for (const Element& l : left) {
            for (const Element& r : right) {
                emit_pair(e, l, r);
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Rule reporting
// ---------------------------------------------------------------------------

RuleInfo Engine::rules_n(int node, const CanonicalNode* x) {
    if (expr_.is_atom(node)) {
        throw std::invalid_argument("rule evaluation needs a tensor, got " + expr_.text());
    }
    PairCtx c(*this, expr_, node, x);
    RuleInfo info;
    info.f1 = c.cond_f1();
    info.f1p = c.cond_f1p();
    info.f2 = c.cond_f2();
    assert(int(info.f1) + int(info.f1p) + int(info.f2) == 1);
    info.f_chosen = info.f1 ? RuleTag::F1 : info.f1p ? RuleTag::F1p : RuleTag::F2;
    info.e1 = c.cond_e1();
    info.e1p = c.cond_e1p();
    info.e2 = c.cond_e2();
    info.e2p = c.cond_e2p();
    info.e_chosen = info.e1    ? RuleTag::E1
                    : info.e1p ? RuleTag::E1p
                    : info.e2  ? RuleTag::E2
                    : info.e2p ? RuleTag::E2p
                               : RuleTag::Zero;
    return info;
}

// ---------------------------------------------------------------------------
// Whole-expression wrappers
// ---------------------------------------------------------------------------

int Engine::weight(const Element& x) {
    expr_.require_element(x);
    return weight_n(expr_.root(), x.data());
}

OptElement Engine::e_step(const Element& x) {
    expr_.require_element(x);
    Element out;
    if (!e_step_n(expr_.root(), x.data(), out)) return std::nullopt;
    return out;
}

OptElement Engine::f_step(const Element& x) {
    expr_.require_element(x);
    Element out;
    if (!f_step_n(expr_.root(), x.data(), out)) return std::nullopt;
    return out;
}

int Engine::epsilon(const Element& x) {
    expr_.require_element(x);
    return epsilon_n(expr_.root(), x.data());
}

int Engine::phi(const Element& x) {
    expr_.require_element(x);
    return phi_n(expr_.root(), x.data());
}

int Engine::psi(const Element& x) {
    expr_.require_element(x);
    return psi_n(expr_.root(), x.data());
}

bool Engine::is_branch_point(const Element& x) {
    expr_.require_element(x);
    return is_branch_point_n(expr_.root(), x.data());
}

bool Engine::above_branch_point(const Element& x) {
    expr_.require_element(x);
    return above_branch_point_n(expr_.root(), x.data());
}

Element Engine::head_of(const Element& x) {
    expr_.require_element(x);
    return head_of_n(expr_.root(), x.data());
}

std::vector<Element> Engine::enumerate(int min_weight) {
    return enumerate_n(expr_.root(), min_weight);
}

std::vector<Element> Engine::enumerate_at(int w) { return enumerate_at_n(expr_.root(), w); }

RuleTag Engine::f_rule(const Element& x) {
    expr_.require_element(x);
    return rules_n(expr_.root(), x.data()).f_chosen;
}

RuleTag Engine::e_rule(const Element& x) {
    expr_.require_element(x);
    return rules_n(expr_.root(), x.data()).e_chosen;
}

RuleInfo Engine::rules(const Element& x) {
    expr_.require_element(x);
    return rules_n(expr_.root(), x.data());
}

// ---------------------------------------------------------------------------
// One-shot free functions
// ---------------------------------------------------------------------------

int weight(const CrystalExpr& e, const Element& x) { return Engine(e).weight(x); }
OptElement e_step(const CrystalExpr& e, const Element& x) { return Engine(e).e_step(x); }
OptElement f_step(const CrystalExpr& e, const Element& x) { return Engine(e).f_step(x); }
int epsilon(const CrystalExpr& e, const Element& x) { return Engine(e).epsilon(x); }
int phi(const CrystalExpr& e, const Element& x) { return Engine(e).phi(x); }
int psi(const CrystalExpr& e, const Element& x) { return Engine(e).psi(x); }
bool is_branch_point(const CrystalExpr& e, const Element& x) {
    return Engine(e).is_branch_point(x);
}
bool above_branch_point(const CrystalExpr& e, const Element& x) {
    return Engine(e).above_branch_point(x);
}

namespace {

Element join_pair(const Element& b, const Element& bp) {
    Element x = b;
    x.insert(x.end(), bp.begin(), bp.end());
    return x;
}

}  // namespace

RuleTag f_rule(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
               const Element& bp) {
    Engine eng(CrystalExpr::tensor(left, right));
    return eng.f_rule(join_pair(b, bp));
}

RuleTag e_rule(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
               const Element& bp) {
    Engine eng(CrystalExpr::tensor(left, right));
    return eng.e_rule(join_pair(b, bp));
}

OptElement tensor_f(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
                    const Element& bp) {
    Engine eng(CrystalExpr::tensor(left, right));
    return eng.f_step(join_pair(b, bp));
}

OptElement tensor_e(const CrystalExpr& left, const CrystalExpr& right, const Element& b,
                    const Element& bp) {
    Engine eng(CrystalExpr::tensor(left, right));
    return eng.e_step(join_pair(b, bp));
}

}  // namespace bcrystal
