#include "bcrystal/axioms.hpp"

#include <map>

namespace bcrystal {

namespace {

struct Checker {
    CrystalView& view;
    const WeightWindow& window;
    AxiomReport report;

    void violation(const std::string& axiom, const Element& x, std::string detail) {
        report.violations.push_back({axiom, view.element_text(x), std::move(detail)});
    }

    bool is_branch(const Element& x) {
        auto up = view.raise(x);
        if (!up) return false;
        auto back = view.lower(*up);
        return !back || *back != x;
    }

    void run() {
        const auto elems = view.elements(window.min_weight);
        report.elements_checked = static_cast<int>(elems.size());
        std::map<Element, Element> raise_image_of_branch;

        for (const Element& x : elems) {
            const int wx = view.weight(x);
            const auto up = view.raise(x);
            const auto down = view.lower(x);

            // (i) e~ raises the weight by 2, f~ lowers it by 2
            if (up && view.weight(*up) != wx + 2) {
                violation("i", x, "wt(e~ x) = " + std::to_string(view.weight(*up)) +
                                      ", expected " + std::to_string(wx + 2));
            }
            if (down && view.weight(*down) != wx - 2) {
                violation("i", x, "wt(f~ x) = " + std::to_string(view.weight(*down)) +
                                      ", expected " + std::to_string(wx - 2));
            }

            // (ii) e~ f~ = id wherever f~ is nonzero
            if (down) {
                auto back = view.raise(*down);
                if (!back || *back != x) {
                    violation("ii", x, "e~ f~ x = " +
                                           (back ? view.element_text(*back) : std::string("0")));
                }
            }

            // (iii) e~ is injective on branch points
            if (up && is_branch(x)) {
                auto [it, fresh] = raise_image_of_branch.emplace(*up, x);
                if (!fresh) {
                    violation("iii", x, "e~ collides with branch point " +
                                            view.element_text(it->second) + " at " +
                                            view.element_text(*up));
                }
            }

            // (iv) epsilon is the minimization
            const int cap = (view.max_weight() - wx) / 2 + 2;
            int min_s = -1;
            Element cur = x;
            for (int s = 0; s <= cap; ++s) {
                auto cup = view.raise(cur);
                bool breaks = true;
                if (cup) {
                    auto back = view.lower(*cup);
                    breaks = !back || *back != cur;
                }
                if (breaks) {
                    min_s = s;
                    break;
                }
                cur = *cup;
            }
            if (min_s < 0) {
                violation("iv", x, "minimization not reached within cap " + std::to_string(cap));
            } else if (view.epsilon(x) != min_s) {
                violation("iv", x, "epsilon = " + std::to_string(view.epsilon(x)) +
                                       ", minimization gives " + std::to_string(min_s));
            }

            // (v) phi = wt + epsilon; f~-chains die exactly at phi + 1
            const int px = view.phi(x);
            if (px != wx + view.epsilon(x)) {
                violation("v", x, "phi = " + std::to_string(px) + " but wt + eps = " +
                                      std::to_string(wx + view.epsilon(x)));
            }
            {
                Element c = x;
                int l = 0;
                bool died = false;
                const int max_steps = (view.max_weight() - window.min_weight) / 2 + 4;
                while (view.weight(c) >= window.min_weight - 2) {
                    if (l > max_steps) {
                        violation("v", x, "f~-chain does not descend (cycle?)");
                        break;
                    }
                    auto d = view.lower(c);
                    ++l;
                    if (!d) {
                        died = true;
                        break;
                    }
                    c = *d;
                }
                if (died && l != px + 1) {
                    violation("v", x, "f~-chain dies after " + std::to_string(l) +
                                          " steps, phi + 1 = " + std::to_string(px + 1));
                }
            }
            if (up && is_branch(x) && view.phi(*up) != 0) {
                violation("v", x, "phi(e~ x) = " + std::to_string(view.phi(*up)) +
                                      " at a branch point, expected 0");
            }
        }
    }
};

}  // namespace

AxiomReport check_axioms(CrystalView& view, const WeightWindow& window) {
    Checker c{view, window, {}};
    c.run();
    return std::move(c.report);
}

AxiomReport check_axioms(const CrystalExpr& expr, const WeightWindow& window) {
    Engine eng(expr);
    EngineView view(eng);
    return check_axioms(view, window);
}

AxiomReport check_branch_facts(CrystalView& view, const WeightWindow& window) {
    Checker c{view, window, {}};
    const auto elems = view.elements(window.min_weight);
    c.report.elements_checked = static_cast<int>(elems.size());
    for (const Element& x : elems) {
        if (!c.is_branch(x)) continue;
        const int wx = view.weight(x);
        if (wx > -2) {
            c.violation("branch-facts", x, "branch point of weight " + std::to_string(wx));
            continue;
        }
        Element cur = x;
        bool broke = false;
        for (int l = 1; l <= -wx - 1; ++l) {
            auto up = view.raise(cur);
            if (!up) {
                c.violation("branch-facts", x,
                            "e~-chain dies after " + std::to_string(l - 1) + " of " +
                                std::to_string(-wx - 1) + " steps");
                broke = true;
                break;
            }
            cur = *up;
            if (c.is_branch(cur)) {
                c.violation("branch-facts", x,
                            "e~^" + std::to_string(l) + " of a branch point is a branch point");
            }
        }
        if (!broke && view.raise(cur)) {
            c.violation("branch-facts", x, "e~^{-wt} of a branch point is nonzero");
        }
        // f~ never kills a branch point (within the window)
        cur = x;
        int steps = 0;
        const int max_steps = (view.max_weight() - window.min_weight) / 2 + 4;
        while (view.weight(cur) >= window.min_weight - 2 && steps++ <= max_steps) {
            auto down = view.lower(cur);
            if (!down) {
                c.violation("branch-facts", x, "f~-chain below a branch point dies");
                break;
            }
            cur = *down;
        }
    }
    return std::move(c.report);
}

AxiomReport check_branch_facts(const CrystalExpr& expr, const WeightWindow& window) {
    Engine eng(expr);
    EngineView view(eng);
    return check_branch_facts(view, window);
}

}  // namespace bcrystal
