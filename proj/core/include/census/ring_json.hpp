#pragma once

#include <string>
#include <string_view>

#include "census/factored_rat.hpp"
#include "census/sparse_poly.hpp"

namespace census {

// JSON forms. Exponent vectors are relative to the "variables" list, which
// names the variables the value mentions in canonical order. Big integers are
// decimal strings, so a round trip is bit-exact.
//
//   SparsePoly:  {"variables": [...], "terms": [[[e...], "n/d"], ...]}
//   FactoredRat: {"variables": [...], "prefactor": [e...],
//                 "numerator": [[[e...], "n/d"], ...],
//                 "denominator": [["n/d", [e...]], ...]}
//
// A denominator atom of multiplicity m is listed m times.

std::string to_json(const SparsePoly& p);
std::string to_json(const FactoredRat& f);
SparsePoly sparse_poly_from_json(std::string_view text);
FactoredRat factored_rat_from_json(std::string_view text);

}  // namespace census
