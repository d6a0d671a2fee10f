#pragma once

#include <string>

#include "outext/extengine.hpp"
#include "outext/repring.hpp"

namespace outext {

/// Table-style decomposition: terms "(nu x lambda)" in ascending
/// lexicographic order of nu, then lambda, joined by " + ". Coefficient 1 is
/// omitted, larger coefficients prefix the parenthesis. "0" when empty.
/// Partitions use exponent shorthand. Golden-tested; do not reformat.
std::string render_birep(const BiRep& b);

/// One CSV line per term: "<nu>","<lambda>",<coeff>, same order as
/// render_birep, partitions in the comma text form.
std::string render_birep_csv(const BiRep& b);

/// ASCII grid of the admissible first-page region: '#' possibly nonzero,
/// 'o' known zero, '.' outside, one row per q, rightmost column annotated
/// with the group the p = |lambda| slot computes. Golden-tested.
std::string diagram_ascii(const E1Support& s);

/// Same picture as standalone SVG text (no external tooling).
std::string diagram_svg(const E1Support& s);

}  // namespace outext
