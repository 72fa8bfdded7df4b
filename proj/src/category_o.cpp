#include "bcrystal/category_o.hpp"

#include <algorithm>
#include <map>

namespace bcrystal {

namespace {

long fdiv(long a, long b) {  // floor division, b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

GenLine gen(Kind kind, int c, long lo, std::optional<long> hi, int mult = 1) {
    return GenLine{kind, c, lo, hi, mult};
}

void append(ModuleSum& out, const ModuleSum& in) {
    out.lines.insert(out.lines.end(), in.lines.begin(), in.lines.end());
}

bool line_empty(const GenLine& g) {
    return g.hi_p && (*g.hi_p < g.lo_p || *g.hi_p < 0);
}

// ---- the closed forms ----

// V(r) (x) V(s), r,s >= 0
ModuleSum vv(int r, int s) {
    return {{gen(Kind::V, r + s, 0, std::min(r, s))}};
}

// M(r) (x) M(s), r,s >= 0
ModuleSum mm_nonneg(int r, int s) {
    const int mn = std::min(r, s), mx = std::max(r, s);
    return {{
        gen(Kind::M, r + s, 0, mn),
        gen(Kind::T, r + s, mn + 1, fdiv(r + s + 1, 2)),
        gen(Kind::M, r + s, mx + 1, std::nullopt),
    }};
}

// V(r) (x) M(s), s >= 0
ModuleSum vm_nonneg(int r, int s) {
    ModuleSum out{{gen(Kind::M, r + s, 0, std::min(r, s))}};
    if (r > s) out.lines.push_back(gen(Kind::T, r + s, s + 1, fdiv(r + s + 1, 2)));
    return out;
}

// (i) V(r) (x) M(s), s < 0
ModuleSum vm_neg(int r, int s) {
    return {{
        gen(Kind::T, r + s, 0, fdiv(r + s + 1, 2)),
        gen(Kind::M, r + s, r + s + 2, r),
    }};
}

// (ii) M(r) (x) M(s), r < 0 or s < 0
ModuleSum mm_neg(int r, int s) {
    return {{
        gen(Kind::T, r + s, 0, fdiv(r + s + 1, 2)),
        gen(Kind::M, r + s, r + s + 2, std::nullopt),
    }};
}

// (iii) V(r) (x) T(s)
ModuleSum vt(int r, int s) {
    return {{
        gen(Kind::T, r + s, 0, std::min(r, s)),
        gen(Kind::T, r + s, s + 1, fdiv(r + s + 1, 2), 2),
    }};
}

// (iv) M(r) (x) Msigma(s)
ModuleSum mmsigma(int r, int s) {
    return {{
        gen(Kind::T, r + s, 0, fdiv(r + s + 1, 2)),
        gen(Kind::M, r + s, r + s + 2, std::nullopt),
    }};
}

// (v) T(r) (x) M(s)
ModuleSum tm(int r, int s) {
    ModuleSum out{{
        gen(Kind::T, r + s, 0, fdiv(std::min(2L * r, r + s + 1L), 2)),
        gen(Kind::T, r + s, r + 1, fdiv(r + s + 1, 2), 2),
    }};
    if (s >= 0) {
        out.lines.push_back(gen(Kind::M, r + s, std::max(r, s) + 1, r + s + 1));
        out.lines.push_back(gen(Kind::M, r + s, r + s + 2, std::nullopt, 2));
    } else {
        out.lines.push_back(gen(Kind::M, r + s, r + s + 2, r));
        out.lines.push_back(gen(Kind::M, r + s, r + 1, std::nullopt, 2));
    }
    return out;
}

// (vi) T(r) (x) T(s) = T(r) (x) M(s) + T(r) (x) M(-s-2)
ModuleSum tt(int r, int s) {
    ModuleSum out = tm(r, s);
    append(out, tm(r, -s - 2));
    return out;
}

}  // namespace

ModuleSum single(CrystalLabel l) {
    return {{gen(l.kind, l.param, 0, 0)}};
}

ModuleSum direct_sum(ModuleSum a, const ModuleSum& b) {
    append(a, b);
    return a;
}

ModuleSum dual_sum(const ModuleSum& m) {
    ModuleSum out;
    for (const GenLine& g : m.lines) {
        if (line_empty(g)) continue;
        switch (g.kind) {
            case Kind::V:
            case Kind::T: out.lines.push_back(g); break;
            case Kind::Msigma: {
                GenLine d = g;
                d.kind = Kind::M;
                out.lines.push_back(d);
                break;
            }
            case Kind::M: {
                // split at the sign of c - 2p
                const long boundary = fdiv(g.c, 2);  // last p with c - 2p >= 0
                GenLine sigma = g, verma = g;
                sigma.kind = Kind::Msigma;
                sigma.hi_p = g.hi_p ? std::min(*g.hi_p, boundary) : boundary;
                verma.lo_p = std::max(g.lo_p, boundary + 1);
                if (!line_empty(sigma) && *sigma.hi_p >= sigma.lo_p) out.lines.push_back(sigma);
                if (!line_empty(verma)) out.lines.push_back(verma);
                break;
            }
        }
    }
    return out;
}

ModuleSum module_tensor(CrystalLabel a, CrystalLabel b) {
    const int r = a.param, s = b.param;
    switch (a.kind) {
        case Kind::V:
            switch (b.kind) {
                case Kind::V: return vv(r, s);
                case Kind::M: return s >= 0 ? vm_nonneg(r, s) : vm_neg(r, s);
                case Kind::T: return vt(r, s);
                case Kind::Msigma: return dual_sum(module_tensor(a, M(s)));
            }
            break;
        case Kind::M:
            switch (b.kind) {
                case Kind::V: return module_tensor(b, a);
                case Kind::M: return (r >= 0 && s >= 0) ? mm_nonneg(r, s) : mm_neg(r, s);
                case Kind::T: return module_tensor(b, a);
                case Kind::Msigma: return mmsigma(r, s);
            }
            break;
        case Kind::T:
            switch (b.kind) {
                case Kind::V: return module_tensor(b, a);
                case Kind::M: return tm(r, s);
                case Kind::T: return tt(r, s);
                case Kind::Msigma: return dual_sum(module_tensor(a, M(s)));
            }
            break;
        case Kind::Msigma:
            switch (b.kind) {
                case Kind::V:
                case Kind::M:
                case Kind::T: return module_tensor(b, a);
                case Kind::Msigma: return dual_sum(module_tensor(M(s), M(r)));
            }
            break;
    }
    throw std::logic_error("unreachable kind pair");
}

LabelMultiset materialize(const ModuleSum& m, int safe_weight) {
    LabelMultiset out;
    for (const GenLine& g : m.lines) {
        const long lo = std::max(g.lo_p, 0L);
        long hi = fdiv(g.c - safe_weight, 2);
        if (g.hi_p) hi = std::min(hi, *g.hi_p);
        for (long p = lo; p <= hi; ++p) {
            out.add(label(g.kind, static_cast<int>(g.c - 2 * p)), g.mult);
        }
    }
    return out;
}

LabelMultiset crystal_of(const ModuleSum& m, int safe_weight) {
    return materialize(m, safe_weight);
}

int Character::eval(int w) const { return character_at(sum_, w); }

Character character(const ModuleSum& m) { return Character(m); }

int character_at(const ModuleSum& m, int w) {
    long total = 0;
    for (const GenLine& g : m.lines) {
        if ((g.c - w) % 2 != 0) continue;  // every label in the line has parity c mod 2
        const long lo = std::max(g.lo_p, 0L);
        const std::optional<long> hi = g.hi_p;
        auto count = [&](long from, long to) {
            from = std::max(from, lo);
            if (hi) to = std::min(to, *hi);
            return to >= from ? to - from + 1 : 0L;
        };
        const long p_wt = (g.c - w) / 2;  // label weight >= w  <=>  p <= p_wt
        switch (g.kind) {
            case Kind::M:
            case Kind::Msigma:
                total += g.mult * count(lo, p_wt);
                break;
            case Kind::V:
                // -x <= w <= x with x = c - 2p
                total += g.mult * count(lo, std::min(p_wt, fdiv(g.c + w, 2)));
                break;
            case Kind::T: {
                // x >= 0, |w| <= x: dimension 1
                total += g.mult * count(lo, std::min({p_wt, fdiv(g.c + w, 2), fdiv(g.c, 2)}));
                // x >= 0, w <= -x-2: dimension 2
                total += 2 * g.mult * count((g.c + w + 2) / 2, fdiv(g.c, 2));
                // x = -1 is really M(-1)
                if (g.c % 2 != 0) {
                    const long p1 = (g.c + 1) / 2;
                    if (w <= -1) total += g.mult * count(p1, p1);
                }
                break;
            }
        }
    }
    return static_cast<int>(total);
}

int tensor_character(CrystalLabel a, CrystalLabel b, int w) {
    int total = 0;
    for (int u = w - b.param; u <= a.param; ++u) {
        const int ca = label_character(a, u);
        if (ca) total += ca * label_character(b, w - u);
    }
    return total;
}

bool character_route_applies(CrystalLabel a, CrystalLabel b) {
    auto torsion_top = [](CrystalLabel l) {  // contributes V-parts when paired up
        return l.kind == Kind::V || (l.kind == Kind::M && l.param >= 0);
    };
    auto torsion_bottom = [](CrystalLabel l) {  // contributes Msigma-parts
        return l.kind == Kind::V || l.kind == Kind::Msigma;
    };
    if (torsion_top(a) && torsion_top(b)) return false;
    if (torsion_bottom(a) && torsion_bottom(b)) return false;
    return true;
}

LabelMultiset character_route_decomposition(CrystalLabel a, CrystalLabel b, int safe_weight) {
    const int top = a.param + b.param;
    auto dim = [&](int w) { return tensor_character(a, b, w); };

    // T-multiplicities: first differences of the character
    std::map<int, int> n_t;  // weight -> multiplicity, weights >= -1
    for (int x = top; x >= -1; --x) {
        if ((top - x) % 2 != 0) continue;
        n_t[x] = dim(x) - dim(x + 2);
    }
    auto t_of = [&](int x) {
        auto it = n_t.find(x);
        return it == n_t.end() ? 0 : it->second;
    };

    // M-multiplicities below -1, by the printed correction formula
    std::map<int, int> n_m;  // weight <= -2
    auto m_of = [&](int w) {  // n(M(w)) for w in [-l, -1]
        if (w >= 0) return 0;
        if (w == -1) return t_of(-1);
        auto it = n_m.find(w);
        return it == n_m.end() ? 0 : it->second;
    };
    for (int l = 0; -l - 2 >= safe_weight; ++l) {
        if ((top - l) % 2 != 0) continue;  // relevant weights share the top's parity
        long v = dim(-l - 2);
        for (long q = 0; q <= fdiv(l - 1, 2); ++q) v -= m_of(static_cast<int>(-l + 2 * q));
        for (long q = 0; q <= fdiv(l, 2); ++q) v -= 2 * t_of(static_cast<int>(l - 2 * q));
        for (long q = 1; l + 2 * q <= top; ++q) v -= t_of(static_cast<int>(l + 2 * q));
        n_m[-l - 2] = static_cast<int>(v);
    }

    LabelMultiset out;
    for (const auto& [x, mult] : n_t) {
        if (mult != 0 && x >= safe_weight) out.add(label(Kind::T, x), mult);
    }
    for (const auto& [w, mult] : n_m) {
        if (mult != 0 && w >= safe_weight) out.add(label(Kind::M, w), mult);
    }
    return out;
}

}  // namespace bcrystal
