#include "bcrystal/case_tables.hpp"

#include <algorithm>

namespace bcrystal {

namespace {

using Guard = std::function<bool(long, long)>;
using Bound = std::function<long(long, long)>;

// subscript b_{cr*r + cs*s + cp*p + c0}
HeadPart pl(int cr, int cs, int cp, int c0) { return {ChainTag::Plain, cr, cs, cp, c0}; }
// subscript b_{(cr*r + cs*s + cp*p + c0)}
HeadPart pa(int cr, int cs, int cp, int c0) { return {ChainTag::Paren, cr, cs, cp, c0}; }

HeadSpec hd(HeadPart left, HeadPart right) { return HeadSpec{left, right}; }

OracleLine line(Kind kind, Bound lo, Bound hi, std::vector<HeadSpec> heads, Guard guard = {}) {
    return OracleLine{kind, std::move(guard), std::move(lo), std::move(hi), std::move(heads)};
}

// the dedicated B(M(-1)) lines: component T(r+s-2p) with 2p pinned to r+s+1
OracleLine m1_line(std::vector<HeadSpec> heads, Guard guard = {}) {
    auto pin = [](long r, long s) { return r + s + 1; };
    return line(Kind::T, pin, pin, std::move(heads), std::move(guard));
}

std::vector<CaseTable> build_cases() {
    std::vector<CaseTable> cases;
    auto lo_0 = [](long, long) { return 0L; };
    auto lo_2s2 = [](long, long s) { return 2 * s + 2; };
    auto lo_2r2 = [](long r, long) { return 2 * r + 2; };
    auto lo_rs4 = [](long r, long s) { return 2 * (r + s + 2); };
    auto lo_2max2 = [](long r, long s) { return 2 * (std::max(r, s) + 1); };
    auto hi_rs = [](long r, long s) { return r + s; };
    auto hi_rs1 = [](long r, long s) { return r + s + 1; };
    auto hi_2r = [](long r, long) { return 2 * r; };
    auto hi_2s = [](long, long s) { return 2 * s; };
    auto hi_2min = [](long r, long s) { return 2 * std::min(r, s); };
    auto hi_2max = [](long r, long s) { return 2 * std::max(r, s); };
    auto s_neg = [](long, long s) { return s < 0; };
    auto s_nonneg = [](long, long s) { return s >= 0; };
    auto r_neg = [](long r, long) { return r < 0; };
    auto r_nonneg = [](long r, long) { return r >= 0; };

    // Case 1: B = M(s), B' = V(r)
    cases.push_back({1,
                     Kind::M,
                     Kind::V,
                     /*r_is_left=*/false,
                     {
                         line(Kind::T, lo_2s2, hi_rs1, {hd(pl(0, 1, 0, 1), pl(1, 0, -1, 0))},
                              s_nonneg),
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pl(1, 1, -1, 1))}, s_neg),
                         line(Kind::M, lo_0, hi_2min, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}),
                         line(Kind::M, lo_rs4, hi_2r, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}),
                     }});

    // Case 2: B = T(s), B' = V(r)
    cases.push_back({2,
                     Kind::T,
                     Kind::V,
                     false,
                     {
                         line(Kind::T, lo_2s2, hi_rs1, {hd(pa(0, 1, 0, 1), pl(1, 0, -1, 0))}),
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))},
                              [](long r, long s) { return s < r; }),
                         line(Kind::T, lo_0, hi_2r, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))},
                              [](long r, long s) { return s >= r; }),
                     }});

    // Case 3: B = Msigma(s), B' = V(r)
    cases.push_back({3,
                     Kind::Msigma,
                     Kind::V,
                     false,
                     {
                         line(Kind::T, lo_2s2, hi_rs1, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))}),
                         line(Kind::Msigma, lo_0, hi_2min, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))}),
                     }});

    // Case 4: B = V(r), B' = Msigma(s)
    cases.push_back({4,
                     Kind::V,
                     Kind::Msigma,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs, {hd(pl(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::Msigma, lo_0, hi_2min, {hd(pl(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         m1_line({hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))}),
                     }});

    // Case 5: B = M(s), B' = M(r)  (this case names the left factor by s)
    cases.push_back({5,
                     Kind::M,
                     Kind::M,
                     false,
                     {
                         line(Kind::T, lo_2s2, hi_rs, {hd(pl(1, 1, -2, 0), pl(0, 0, 1, 1))}),
                         line(Kind::T, lo_2r2, hi_rs1, {hd(pl(1, 0, 0, 1), pl(0, 1, -1, 0))},
                              r_nonneg),
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pl(1, 1, -1, 1))}, r_neg),
                         line(Kind::M, lo_0, hi_2min, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}, r_neg),
                         line(Kind::M, lo_2max2, {}, {hd(pl(1, 0, 0, 1), pl(-1, 0, 1, -1))},
                              r_nonneg),
                         line(Kind::M, lo_rs4, hi_2r, {hd(pl(0, 0, 1, 0), pl(0, 0, 0, 0))}, s_neg),
                         m1_line({hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))},
                                 [](long r, long s) { return r >= s; }),
                     }});

    // Case 6: B = M(r), B' = Msigma(s)
    cases.push_back({6,
                     Kind::M,
                     Kind::Msigma,
                     true,
                     {
                         line(Kind::T, lo_0, hi_2s, {hd(pl(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::T, lo_2s2, hi_rs, {hd(pl(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::T, lo_2r2, hi_rs1, {hd(pl(1, 0, 0, 1), pa(0, 1, -1, 0))},
                              r_nonneg),
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pa(1, 1, -1, 1))}, r_neg),
                         line(Kind::M, lo_rs4, {}, {hd(pl(1, 0, 0, 1), pl(-1, -1, 1, -2))},
                              r_nonneg),
                         line(Kind::M, lo_rs4, hi_2s, {hd(pl(0, 0, 0, 0), pa(0, 0, 1, 0))}, r_neg),
                         line(Kind::M, lo_2s2, {}, {hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))}, r_neg),
                         m1_line({hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))}, r_nonneg),
                     }});

    // Case 7: B = Msigma(s), B' = M(r)
    cases.push_back({7,
                     Kind::Msigma,
                     Kind::M,
                     false,
                     {
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))},
                              [](long r, long s) { return s < r; }),
                         line(Kind::T, lo_0, hi_2r, {hd(pl(0, 0, 0, 0), pl(1, 0, -1, 0))},
                              [](long r, long s) { return s >= r; }),
                         line(Kind::T, lo_2r2, hi_rs, {hd(pa(1, 1, -2, 0), pl(0, 0, 1, 1))}),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))},
                              r_nonneg),
                         line(Kind::M, lo_2s2, {}, {hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))}, r_neg),
                         line(Kind::M, lo_rs4, hi_2s, {hd(pa(0, 0, 1, 0), pl(0, 0, 0, 0))}),
                         m1_line({hd(pa(0, 0, 0, 0), pl(0, 0, 1, 0))},
                                 [](long r, long s) { return s >= r; }),
                     }});

    // Case 8: B = Msigma(r), B' = Msigma(s)
    cases.push_back({8,
                     Kind::Msigma,
                     Kind::Msigma,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs, {hd(pa(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::T, lo_2r2, hi_rs1, {hd(pl(0, 0, 0, 0), pa(0, 1, -1, 0))}),
                         line(Kind::Msigma, lo_0, hi_2min, {hd(pa(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::M, lo_2max2, [](long r, long s) { return 2 * (r + s + 1); },
                              {hd(pl(0, 0, 0, 0), pa(-1, 0, 1, -1))}),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 0, 0, 0), pl(-1, -1, 1, -2))}),
                         m1_line({hd(pa(0, 0, 0, 0), pl(0, -1, 1, -1))}),
                     }});

    // Case 9: B = M(s), B' = T(r)
    cases.push_back({9,
                     Kind::M,
                     Kind::T,
                     false,
                     {
                         line(Kind::T, lo_0, hi_2min, {hd(pl(0, 1, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::T, lo_2r2, hi_rs,
                              {hd(pl(1, 1, -2, 0), pl(-1, 0, 1, 0)),
                               hd(pl(1, 1, -2, 0), pa(0, 0, 1, 1))}),
                         line(Kind::T, lo_2s2, hi_rs1, {hd(pl(0, 1, 0, 1), pa(1, 0, -1, 0))}),
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pa(1, 1, -1, 1))}, s_neg),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 1, 0, 1), pl(-1, -1, 1, -2))},
                              s_nonneg),
                         line(Kind::M, lo_2max2, {}, {hd(pl(0, 1, 0, 1), pa(0, -1, 1, -1))},
                              s_nonneg),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 0, 0, 0), pa(0, 0, 1, 0))}, s_neg),
                         line(Kind::M, lo_2s2, {}, {hd(pl(0, 0, 0, 0), pa(0, -1, 1, -1))}, s_neg),
                         m1_line({hd(pl(0, 0, 0, 0), pl(0, 1, -1, 0)),
                                  hd(pl(0, 0, 0, 0), pa(0, 0, 1, 0))},
                                 [](long r, long s) { return s >= r; }),
                     }});

    // Case 10: B = T(r), B' = M(s)
    cases.push_back({10,
                     Kind::T,
                     Kind::M,
                     true,
                     {
                         line(Kind::T, lo_0, hi_rs1, {hd(pl(0, 0, 0, 0), pl(0, 1, -1, 0))},
                              [](long r, long s) { return s > r; }),
                         line(Kind::T, lo_0, hi_2s, {hd(pl(0, 0, 0, 0), pl(0, 1, -1, 0))},
                              [](long r, long s) { return s <= r; }),
                         line(Kind::T, lo_2r2, hi_rs1, {hd(pa(1, 0, 0, 1), pl(0, 1, -1, 0))}),
                         line(Kind::T, lo_2s2, hi_rs, {hd(pa(1, 1, -2, 0), pl(0, 0, 1, 1))}),
                         line(Kind::M, lo_rs4, {}, {hd(pl(0, 0, 0, 0), pl(-1, 0, 1, -1))},
                              s_nonneg),
                         line(Kind::M, lo_2r2, {}, {hd(pl(0, 0, 0, 0), pl(-1, 0, 1, -1))}, s_neg),
                         line(Kind::M, lo_2max2, {}, {hd(pa(1, 0, 0, 1), pl(-1, 0, 1, -1))}),
                         line(Kind::M, lo_rs4, hi_2r, {hd(pa(0, 0, 1, 0), pl(0, 0, 0, 0))}),
                         m1_line({hd(pa(0, 0, 0, 0), pl(0, 0, 1, 0))},
                                 [](long r, long s) { return s <= r; }),
                     }});

    // Case 11: B = T(r), B' = T(s)
    cases.push_back({11,
                     Kind::T,
                     Kind::T,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs,
                              {hd(pa(1, 1, -2, 0), pa(0, 0, 1, 1)),
                               hd(pa(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::T, lo_0, hi_2s, {hd(pa(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::T, lo_2r2, hi_rs1,
                              {hd(pa(1, 0, 0, 1), pa(0, 1, -1, 0)),
                               hd(pl(0, 0, 0, 0), pa(0, 1, -1, 0))}),
                         line(Kind::M, lo_2s2, {},
                              {hd(pa(1, 0, 0, 1), pa(-1, 0, 1, -1)),
                               hd(pl(0, 0, 0, 0), pa(-1, 0, 1, -1))}),
                         line(Kind::M, lo_2r2, {},
                              {hd(pa(1, 0, 0, 1), pl(-1, 0, 1, -1)),
                               hd(pl(0, 0, 0, 0), pl(-1, 0, 1, -1))}),
                         m1_line({hd(pa(0, 0, 0, 0), pa(0, 0, 1, 0)),
                                  hd(pa(0, 0, 0, 0), pl(0, -1, 1, -1))},
                                 [](long r, long s) { return r >= s; }),
                     }});

    // Case 12: B = T(r), B' = Msigma(s)
    cases.push_back({12,
                     Kind::T,
                     Kind::Msigma,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs, {hd(pa(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::T, lo_0, hi_2max, {hd(pa(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::T, lo_2r2, hi_rs1,
                              {hd(pl(0, 0, 0, 0), pa(0, 1, -1, 0)),
                               hd(pa(1, 0, 0, 1), pa(0, 1, -1, 0))}),
                         line(Kind::M, lo_2r2, {}, {hd(pl(0, 0, 0, 0), pa(-1, 0, 1, -1))},
                              [](long r, long s) { return r >= s; }),
                         line(Kind::M, lo_2s2, [](long r, long s) { return 2 * (r + s + 1); },
                              {hd(pl(0, 0, 0, 0), pa(-1, 0, 1, -1))},
                              [](long r, long s) { return s > r; }),
                         line(Kind::M, lo_rs4, {},
                              {hd(pl(0, 0, 0, 0), pl(-1, -1, 1, -2)),
                               hd(pa(1, 0, 0, 1), pl(-1, -1, 1, -2))}),
                         m1_line({hd(pa(0, 0, 0, 0), pl(0, -1, 1, -1))},
                                 [](long r, long s) { return r >= s; }),
                     }});

    // Case 13: B = Msigma(s), B' = T(r)
    cases.push_back({13,
                     Kind::Msigma,
                     Kind::T,
                     false,
                     {
                         line(Kind::T, lo_2r2, hi_rs,
                              {hd(pa(1, 1, -2, 0), pa(0, 0, 1, 1)),
                               hd(pa(1, 1, -2, 0), pl(-1, 0, 1, 0))}),
                         line(Kind::T, lo_0, hi_2r, {hd(pa(0, 1, -1, 0), pl(0, 0, 0, 0))}),
                         line(Kind::T, lo_2s2, hi_rs1, {hd(pl(0, 0, 0, 0), pa(1, 0, -1, 0))}),
                         line(Kind::M, lo_2r2, {}, {hd(pl(0, 0, 0, 0), pa(0, -1, 1, -1))}),
                         line(Kind::M, lo_2s2, {}, {hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))}),
                         m1_line({hd(pa(0, 0, 0, 0), pa(0, 0, 1, 0))},
                                 [](long r, long s) { return r <= s; }),
                     }});

    // Case 14: B = V(r), B' = V(s)
    cases.push_back({14,
                     Kind::V,
                     Kind::V,
                     true,
                     {
                         line(Kind::V, lo_0, hi_2min, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}),
                     }});

    // Case 15: B = V(r), B' = M(s)
    cases.push_back({15,
                     Kind::V,
                     Kind::M,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs, {hd(pl(1, 1, -2, 0), pl(0, 0, 1, 1))}),
                         line(Kind::M, lo_0, hi_2min, {hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))}),
                         line(Kind::M, lo_rs4, hi_2r, {hd(pl(0, 0, 1, 0), pl(0, 0, 0, 0))}),
                         m1_line({hd(pl(0, 0, 0, 0), pl(0, 0, 1, 0))},
                                 [](long r, long s) { return r >= s; }),
                     }});

    // Case 16: B = V(r), B' = T(s)
    cases.push_back({16,
                     Kind::V,
                     Kind::T,
                     true,
                     {
                         line(Kind::T, lo_2s2, hi_rs,
                              {hd(pl(1, 1, -2, 0), pa(0, 0, 1, 1)),
                               hd(pl(1, 1, -2, 0), pl(0, -1, 1, 0))}),
                         line(Kind::T, lo_0, hi_2min, {hd(pl(1, 0, -1, 0), pl(0, 0, 0, 0))}),
                         m1_line({hd(pl(0, 0, 0, 0), pa(0, 0, 1, 0)),
                                  hd(pl(0, 0, 0, 0), pl(0, -1, 1, -1))},
                                 [](long r, long s) { return r >= s; }),
                     }});

    return cases;
}

bool part_exists(const HeadPart& h, CrystalLabel factor, long r, long s, long p) {
    const long idx = h.cr * r + h.cs * s + h.cp * p + h.c0;
    return idx >= 0 && idx <= INT32_MAX && in_carrier(factor, h.chain, static_cast<int>(idx));
}

}  // namespace

const std::vector<CaseTable>& all_cases() {
    static const std::vector<CaseTable> cases = build_cases();
    return cases;
}

const CaseTable& case_for(Kind left, Kind right) {
    for (const CaseTable& c : all_cases()) {
        if (c.left == left && c.right == right) return c;
    }
    throw std::logic_error("no case table for kind pair");  // all 16 pairs are covered
}

OracleExpansion oracle_expand(CrystalLabel left, CrystalLabel right, const WeightWindow& window) {
    const CaseTable& table = case_for(left.kind, right.kind);
    const long r = table.r_is_left ? left.param : right.param;
    const long s = table.r_is_left ? right.param : left.param;

    OracleExpansion exp;
    exp.case_id = table.case_id;
    exp.dec.expr_text = to_string(left) + " (x) " + to_string(right);
    exp.dec.window = window;

    for (std::size_t li = 0; li < table.lines.size(); ++li) {
        const OracleLine& ln = table.lines[li];
        if (ln.guard && !ln.guard(r, s)) continue;
        const long lo = std::max(ln.lo2p(r, s), 0L);  // p runs over Z+
        long hi = r + s - window.safe_weight;         // truncation at the safe weight
        if (ln.hi2p) hi = std::min(hi, ln.hi2p(r, s));
        for (long p = (lo + 1) / 2; 2 * p <= hi; ++p) {
            if (2 * p < lo) continue;
            int mult = 0;
            for (const HeadSpec& h : ln.heads) {
                if (part_exists(h.left, left, r, s, p) && part_exists(h.right, right, r, s, p)) {
                    ++mult;
                }
            }
            if (mult == 0) continue;
            const int w = static_cast<int>(r + s - 2 * p);
            if (!is_valid_label(ln.kind, w)) {
                exp.anomalies.push_back(
                    {table.case_id, static_cast<int>(li) + 1, p, ln.kind, w, mult});
                continue;
            }
            const CrystalLabel comp = label(ln.kind, w);
            exp.dec.components.add(comp, mult);
            auto& lines = exp.contributing_lines[comp];
            if (lines.empty() || lines.back() != static_cast<int>(li) + 1) {
                lines.push_back(static_cast<int>(li) + 1);
            }
        }
    }
    return exp;
}

Decomposition oracle_decompose(CrystalLabel left, CrystalLabel right,
                               const WeightWindow& window) {
    return oracle_expand(left, right, window).dec;
}

}  // namespace bcrystal
