#ifndef BCRYSTAL_IO_HPP
#define BCRYSTAL_IO_HPP

#include <string>

#include "bcrystal/decomposer.hpp"
#include "bcrystal/engine.hpp"

namespace bcrystal {

/// JSON schema:
/// {"expr": str, "window": {"min": int, "safe": int},
///  "components": [{"label": str, "multiplicity": int}],
///  "reports": [{"label": str, "head": str, "branch": str|null}]}
std::string decomposition_to_json(const Decomposition& dec, const CrystalExpr& expr, int indent = 2);

/// Re-renders parsed JSON; parse + render round-trips byte-identically.
std::string rerender_decomposition_json(const std::string& json_text, int indent = 2);

/// Plain-text table of a decomposition.
std::string decomposition_to_table(const Decomposition& dec, const CrystalExpr& expr);
std::string decomposition_to_table(const Decomposition& dec);

/// DOT digraph of the crystal graph in the window: solid f~-edges, branch
/// points doubly circled, and the e~-edge of each branch merge dashed.
std::string crystal_to_dot(Engine& engine, const WeightWindow& window);

}  // namespace bcrystal

#endif
