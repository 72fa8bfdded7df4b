#ifndef BCRYSTAL_CORE_HPP
#define BCRYSTAL_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcrystal {

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

/// The four families of indecomposable crystals (and of indecomposable
/// modules in category O): finite string V(r), Verma string M(s), the
/// two-string T(r) and the dual-Verma Msigma(r).
enum class Kind : std::uint8_t { V, M, T, Msigma };

const char* kind_name(Kind k);

struct CrystalLabel {
    Kind kind;
    int param;

    friend auto operator<=>(const CrystalLabel&, const CrystalLabel&) = default;
};

/// Builds a canonical label. T(-1) is identified with M(-1), so the
/// constructor normalizes it; V(r), Msigma(r) need r >= 0 and T(r) needs
/// r >= -1. Throws std::invalid_argument otherwise.
CrystalLabel label(Kind kind, int param);

inline CrystalLabel V(int r) { return label(Kind::V, r); }
inline CrystalLabel M(int s) { return label(Kind::M, s); }
inline CrystalLabel T(int r) { return label(Kind::T, r); }
inline CrystalLabel Msigma(int r) { return label(Kind::Msigma, r); }

bool is_valid_label(Kind kind, int param);

/// Highest weight occurring in the crystal/module: the parameter itself
/// for all four kinds.
int top_weight(CrystalLabel l);

/// Restricted duality on labels: V and T are self-dual, M(s) for s >= 0
/// swaps with Msigma(s), M(s) for s < 0 is self-dual.
CrystalLabel dual_label(CrystalLabel l);

std::string to_string(CrystalLabel l);

// ---------------------------------------------------------------------------
// Canonical nodes and elements
// ---------------------------------------------------------------------------

/// Which of the (at most) two chains of a canonical crystal a node lives on.
/// Plain is the b_j chain, Paren the b_(j) chain; V and M only have Plain.
enum class ChainTag : std::uint8_t { Plain, Paren };

struct CanonicalNode {
    CrystalLabel label;
    ChainTag chain;
    int index;

    friend auto operator<=>(const CanonicalNode&, const CanonicalNode&) = default;
};

/// Builds a node after checking it lies in the carrier of its label.
CanonicalNode node(CrystalLabel l, ChainTag chain, int index);

bool in_carrier(CrystalLabel l, ChainTag chain, int index);

/// text form of the node part only: "b2" or "b(1)"
std::string node_text(const CanonicalNode& n);

/// An element of a (possibly tensor) crystal, stored as the list of its
/// canonical leaves in left-to-right order; the tree shape is carried by
/// the CrystalExpr it belongs to. Lexicographic comparison of the leaf
/// vector realizes the total element order.
using Element = std::vector<CanonicalNode>;

/// The zero of the crystal maps is not an element; maps return an empty
/// optional for it.
using OptElement = std::optional<Element>;

inline Element leaf_element(const CanonicalNode& n) { return Element{n}; }

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept;
};

// ---------------------------------------------------------------------------
// Crystal expressions
// ---------------------------------------------------------------------------

/// A tensor expression whose leaves are canonical labels. Immutable after
/// construction; nodes live in a flat arena so sub-expressions are cheap
/// to address by id.
class CrystalExpr {
public:
    static CrystalExpr atom(CrystalLabel l);
    static CrystalExpr tensor(const CrystalExpr& left, const CrystalExpr& right);

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    bool is_atom(int id) const { return nodes_[id].left < 0; }
    CrystalLabel atom_label(int id) const { return nodes_[id].label; }
    int left(int id) const { return nodes_[id].left; }
    int right(int id) const { return nodes_[id].right; }

    /// [leaf_begin, leaf_end) is the span of this node's leaves inside a
    /// full element vector.
    int leaf_begin(int id) const { return nodes_[id].leaf_begin; }
    int leaf_end(int id) const { return nodes_[id].leaf_end; }
    int leaf_count(int id) const { return nodes_[id].leaf_end - nodes_[id].leaf_begin; }
    int factor_count() const { return leaf_count(root_); }

    /// Largest weight occurring in the node's carrier; additive over tensor.
    int max_weight(int id) const { return nodes_[id].max_weight; }

    CrystalLabel leaf_label(int leaf_pos) const { return leaf_labels_[leaf_pos]; }

    /// "V(1) (x) V(1)", nested factors parenthesized.
    std::string text() const { return text_of(root_); }

    /// Element text: "V(1):b0 (x) V(1):b1".
    std::string element_text(const Element& x) const;

    /// Checks that x is shaped for this expression (leaf labels match);
    /// throws std::invalid_argument otherwise.
    void require_element(const Element& x) const;

    friend bool operator==(const CrystalExpr& a, const CrystalExpr& b) {
        return a.text_of(a.root_) == b.text_of(b.root_);
    }

private:
    struct Node {
        int left = -1, right = -1;
        CrystalLabel label{Kind::V, 0};
        int leaf_begin = 0, leaf_end = 0;
        int max_weight = 0;
    };

    std::string text_of(int id) const;

    std::vector<Node> nodes_;
    std::vector<CrystalLabel> leaf_labels_;
    int root_ = 0;
};

// ---------------------------------------------------------------------------
// Closed-form structure maps on canonical (atom) crystals
// ---------------------------------------------------------------------------

namespace atom {

int weight(const CanonicalNode& n);
int epsilon(const CanonicalNode& n);   // = index, on every chain of every kind
int phi(const CanonicalNode& n);
std::optional<CanonicalNode> raise(const CanonicalNode& n);  // e~
std::optional<CanonicalNode> lower(const CanonicalNode& n);  // f~
bool is_branch_point(const CanonicalNode& n);
bool above_branch_point(const CanonicalNode& n);

/// All carrier nodes with weight >= min_weight, in element order.
std::vector<CanonicalNode> enumerate(CrystalLabel l, int min_weight);
/// All carrier nodes with weight == w.
std::vector<CanonicalNode> enumerate_at(CrystalLabel l, int w);

}  // namespace atom

// ---------------------------------------------------------------------------
// Windows
// ---------------------------------------------------------------------------

/// Truncation bounds for enumerating the infinite families. Everything with
/// weight >= min_weight is enumerated; components are only reported when
/// their head weight is >= safe_weight, so the margin below safe_weight is
/// the room classification needs.
struct WeightWindow {
    int min_weight;
    int safe_weight;

    int margin() const { return safe_weight - min_weight; }

    friend auto operator<=>(const WeightWindow&, const WeightWindow&) = default;
};

/// min_weight + margin, validated: margin >= 2*factors + 2.
WeightWindow window(int min_weight, int margin, int factor_count);

int default_margin(int factor_count);  // 10 + 2*factors

/// The default window for an expression: given depth W, enumerate down to
/// -W with the default margin.
WeightWindow default_window(const CrystalExpr& expr, int depth = 40);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A classification or chain decision ran below the enumeration window.
struct WindowExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The epsilon minimization exceeded its weight-derived cap; this means a
/// broken crystal (or a wrong cap) and is always a hard error.
struct EpsilonCapExceeded : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace bcrystal

#endif
