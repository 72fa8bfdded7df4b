#include "bcrystal/core.hpp"

#include <sstream>

namespace bcrystal {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::V: return "V";
        case Kind::M: return "M";
        case Kind::T: return "T";
        case Kind::Msigma: return "Msigma";
    }
    return "?";
}

bool is_valid_label(Kind kind, int param) {
    switch (kind) {
        case Kind::V: return param >= 0;
        case Kind::M: return true;
        case Kind::T: return param >= -1;
        case Kind::Msigma: return param >= 0;
    }
    return false;
}

CrystalLabel label(Kind kind, int param) {
    if (!is_valid_label(kind, param)) {
        throw std::invalid_argument("invalid label " + std::string(kind_name(kind)) + "(" +
                                    std::to_string(param) + ")");
    }
    if (kind == Kind::T && param == -1) return CrystalLabel{Kind::M, -1};
    return CrystalLabel{kind, param};
}

int top_weight(CrystalLabel l) { return l.param; }

CrystalLabel dual_label(CrystalLabel l) {
    switch (l.kind) {
        case Kind::V:
        case Kind::T: return l;
        case Kind::M: return l.param >= 0 ? CrystalLabel{Kind::Msigma, l.param} : l;
        case Kind::Msigma: return CrystalLabel{Kind::M, l.param};
    }
    return l;
}

std::string to_string(CrystalLabel l) {
    return std::string(kind_name(l.kind)) + "(" + std::to_string(l.param) + ")";
}

bool in_carrier(CrystalLabel l, ChainTag chain, int index) {
    if (index < 0) return false;
    switch (l.kind) {
        case Kind::V: return chain == ChainTag::Plain && index <= l.param;
        case Kind::M: return chain == ChainTag::Plain;
        case Kind::T: return true;
        case Kind::Msigma: return chain == ChainTag::Plain || index <= l.param;
    }
    return false;
}

CanonicalNode node(CrystalLabel l, ChainTag chain, int index) {
    if (!in_carrier(l, chain, index)) {
        throw std::invalid_argument("node " + std::string(chain == ChainTag::Paren ? "b(" : "b") +
                                    std::to_string(index) + (chain == ChainTag::Paren ? ")" : "") +
                                    " is not in the carrier of " + to_string(l));
    }
    return CanonicalNode{l, chain, index};
}

std::string node_text(const CanonicalNode& n) {
    if (n.chain == ChainTag::Paren) return "b(" + std::to_string(n.index) + ")";
    return "b" + std::to_string(n.index);
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const CanonicalNode& n : e) {
        mix(static_cast<std::size_t>(n.label.kind));
        mix(static_cast<std::size_t>(static_cast<unsigned>(n.label.param)));
        mix(static_cast<std::size_t>(n.chain));
        mix(static_cast<std::size_t>(static_cast<unsigned>(n.index)));
    }
    return h;
}

// ---------------------------------------------------------------------------
// CrystalExpr
// ---------------------------------------------------------------------------

CrystalExpr CrystalExpr::atom(CrystalLabel l) {
    l = label(l.kind, l.param);  // validate + normalize
    CrystalExpr e;
    e.nodes_.push_back(Node{-1, -1, l, 0, 1, top_weight(l)});
    e.leaf_labels_.push_back(l);
    e.root_ = 0;
    return e;
}

CrystalExpr CrystalExpr::tensor(const CrystalExpr& left, const CrystalExpr& right) {
    CrystalExpr e;
    e.nodes_ = left.nodes_;
    int offset = static_cast<int>(e.nodes_.size());
    int leaf_offset = static_cast<int>(left.leaf_labels_.size());
    for (Node n : right.nodes_) {
        if (n.left >= 0) {
            n.left += offset;
            n.right += offset;
        }
        n.leaf_begin += leaf_offset;
        n.leaf_end += leaf_offset;
        e.nodes_.push_back(n);
    }
    e.leaf_labels_ = left.leaf_labels_;
    e.leaf_labels_.insert(e.leaf_labels_.end(), right.leaf_labels_.begin(),
                          right.leaf_labels_.end());
    Node root;
    root.left = left.root_;
    root.right = right.root_ + offset;
    root.leaf_begin = 0;
    root.leaf_end = static_cast<int>(e.leaf_labels_.size());
    root.max_weight = left.max_weight(left.root_) + right.max_weight(right.root_);
    e.nodes_.push_back(root);
    e.root_ = static_cast<int>(e.nodes_.size()) - 1;
    return e;
}

std::string CrystalExpr::text_of(int id) const {
    if (is_atom(id)) return to_string(nodes_[id].label);
    auto wrap = [this](int child) {
        std::string s = text_of(child);
        return is_atom(child) ? s : "(" + s + ")";
    };
    return wrap(nodes_[id].left) + " (x) " + wrap(nodes_[id].right);
}

std::string CrystalExpr::element_text(const Element& x) const {
    require_element(x);
    // recursive over node ids
    struct Walk {
        const CrystalExpr& e;
        const Element& x;
        std::string render(int id) const {
            if (e.is_atom(id)) {
                const CanonicalNode& n = x[e.leaf_begin(id)];
                return to_string(n.label) + ":" + node_text(n);
            }
            auto wrap = [this](int child) {
                std::string s = render(child);
                return e.is_atom(child) ? s : "(" + s + ")";
            };
            return wrap(e.left(id)) + " (x) " + wrap(e.right(id));
        }
    };
    return Walk{*this, x}.render(root_);
}

void CrystalExpr::require_element(const Element& x) const {
    if (static_cast<int>(x.size()) != factor_count()) {
        throw std::invalid_argument("element shape mismatch: expected " +
                                    std::to_string(factor_count()) + " leaves, got " +
                                    std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].label != leaf_labels_[i]) {
            throw std::invalid_argument("element leaf " + std::to_string(i) + " has label " +
                                        to_string(x[i].label) + ", expected " +
                                        to_string(leaf_labels_[i]));
        }
        if (!in_carrier(x[i].label, x[i].chain, x[i].index)) {
            throw std::invalid_argument("element leaf " + std::to_string(i) +
                                        " lies outside the carrier of " +
                                        to_string(x[i].label));
        }
    }
}

// ---------------------------------------------------------------------------
// Atom structure maps: the closed forms of the four families
// ---------------------------------------------------------------------------

namespace atom {

int weight(const CanonicalNode& n) {
    const int r = n.label.param;
    switch (n.label.kind) {
        case Kind::V:
        case Kind::M: return r - 2 * n.index;
        case Kind::T:
        case Kind::Msigma:
            return n.chain == ChainTag::Paren ? r - 2 * n.index : -r - 2 - 2 * n.index;
    }
    return 0;
}

int epsilon(const CanonicalNode& n) { return n.index; }

int phi(const CanonicalNode& n) {
    const int r = n.label.param;
    switch (n.label.kind) {
        case Kind::V:
        case Kind::M: return r - n.index;
        case Kind::T:
        case Kind::Msigma:
            return n.chain == ChainTag::Paren ? r - n.index : -r - 2 - n.index;
    }
    return 0;
}

std::optional<CanonicalNode> raise(const CanonicalNode& n) {
    CanonicalNode out = n;
    if ((n.label.kind == Kind::T || n.label.kind == Kind::Msigma) &&
        n.chain == ChainTag::Plain && n.index == 0) {
        // e~ b_0 = b_(r): the branch merge
        out.chain = ChainTag::Paren;
        out.index = n.label.param;
        return out;
    }
    out.index = n.index - 1;
    if (!in_carrier(out.label, out.chain, out.index)) return std::nullopt;
    return out;
}

std::optional<CanonicalNode> lower(const CanonicalNode& n) {
    CanonicalNode out = n;
    out.index = n.index + 1;
    if (!in_carrier(out.label, out.chain, out.index)) return std::nullopt;
    return out;
}

bool is_branch_point(const CanonicalNode& n) {
    // b_0 on the Plain chain of T(r)/Msigma(r); everywhere else f~ e~ = id
    // wherever e~ is nonzero.
    return (n.label.kind == Kind::T || n.label.kind == Kind::Msigma) &&
           n.chain == ChainTag::Plain && n.index == 0;
}

bool above_branch_point(const CanonicalNode& n) {
    if (n.label.kind != Kind::T && n.label.kind != Kind::Msigma) return false;
    if (n.chain == ChainTag::Plain) return n.index == 0;
    return n.index <= n.label.param;  // b_(j) = e~^{r+1-j} b_0 for 0 <= j <= r
}

std::vector<CanonicalNode> enumerate(CrystalLabel l, int min_weight) {
    std::vector<CanonicalNode> out;
    auto chain = [&](ChainTag tag, int top, std::optional<int> max_index) {
        // weights top - 2j >= min_weight
        long hi = (static_cast<long>(top) - min_weight) / 2;
        if (hi < 0) return;
        if (max_index && *max_index < hi) hi = *max_index;
        for (int j = 0; j <= hi; ++j) out.push_back(CanonicalNode{l, tag, j});
    };
    switch (l.kind) {
        case Kind::V: chain(ChainTag::Plain, l.param, l.param); break;
        case Kind::M: chain(ChainTag::Plain, l.param, std::nullopt); break;
        case Kind::T:
            chain(ChainTag::Plain, -l.param - 2, std::nullopt);
            chain(ChainTag::Paren, l.param, std::nullopt);
            break;
        case Kind::Msigma:
            chain(ChainTag::Plain, -l.param - 2, std::nullopt);
            chain(ChainTag::Paren, l.param, l.param);
            break;
    }
    return out;
}

std::vector<CanonicalNode> enumerate_at(CrystalLabel l, int w) {
    std::vector<CanonicalNode> out;
    auto probe = [&](ChainTag tag, int top, std::optional<int> max_index) {
        int diff = top - w;
        if (diff < 0 || diff % 2 != 0) return;
        int j = diff / 2;
        if (max_index && j > *max_index) return;
        out.push_back(CanonicalNode{l, tag, j});
    };
    switch (l.kind) {
        case Kind::V: probe(ChainTag::Plain, l.param, l.param); break;
        case Kind::M: probe(ChainTag::Plain, l.param, std::nullopt); break;
        case Kind::T:
            probe(ChainTag::Plain, -l.param - 2, std::nullopt);
            probe(ChainTag::Paren, l.param, std::nullopt);
            break;
        case Kind::Msigma:
            probe(ChainTag::Plain, -l.param - 2, std::nullopt);
            probe(ChainTag::Paren, l.param, l.param);
            break;
    }
    return out;
}

}  // namespace atom

int default_margin(int factor_count) { return 10 + 2 * factor_count; }

WeightWindow window(int min_weight, int margin, int factor_count) {
    if (margin < 2 * factor_count + 2) {
        throw std::invalid_argument("window margin " + std::to_string(margin) +
                                    " is too small for " + std::to_string(factor_count) +
                                    " tensor factors (need >= " +
                                    std::to_string(2 * factor_count + 2) + ")");
    }
    return WeightWindow{min_weight, min_weight + margin};
}

WeightWindow default_window(const CrystalExpr& expr, int depth) {
    return window(-depth, default_margin(expr.factor_count()), expr.factor_count());
}

}  // namespace bcrystal
