#ifndef BCRYSTAL_PARSE_HPP
#define BCRYSTAL_PARSE_HPP

#include <string>
#include <utility>

#include "bcrystal/category_o.hpp"
#include "bcrystal/core.hpp"

namespace bcrystal {

/// "V(3)", "M(-2)", "Msigma(4)"; T(-1) normalizes to M(-1).
CrystalLabel parse_label(const std::string& text);

/// "V(1) (x) V(1)", "(V(1) (x) V(1)) (x) M(0)". Nesting must be explicit:
/// "a (x) b (x) c" is rejected.
CrystalExpr parse_expr(const std::string& text);

/// "V(3):b2", "T(2):b(1) (x) V(1):b0"; returns the carrier expression the
/// element spells out together with the element itself.
std::pair<CrystalExpr, Element> parse_element(const std::string& text);

/// Module expressions: labels, "(+)" direct sums, "(x)" tensor products
/// of single labels, and dual(...).
ModuleSum parse_module_expr(const std::string& text);

}  // namespace bcrystal

#endif
