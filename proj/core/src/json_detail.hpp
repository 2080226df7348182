#pragma once

#include <json.hpp>

#include "census/factored_rat.hpp"
#include "census/sparse_poly.hpp"

namespace census::detail {

nlohmann::json poly_json(const SparsePoly& p);
nlohmann::json rat_json(const FactoredRat& f);
SparsePoly poly_from(const nlohmann::json& j);
FactoredRat rat_from(const nlohmann::json& j);

}  // namespace census::detail
