#include "census/variables.hpp"

#include <charconv>

namespace census {

std::string var_name(int v) {
  if (v >= var::alpha(1) && v <= var::alpha(2 * kMaxGenus)) return "alpha_" + std::to_string(v + 1);
  if (v == var::q) return "q";
  if (v == var::z) return "z";
  if (v == var::T) return "T";
  if (v >= var::zi(1) && v <= var::zi(kMaxChain)) return "z_" + std::to_string(v - var::T);
  if (v >= var::u(1) && v <= var::u(kMaxChain)) return "u_" + std::to_string(v - var::T - kMaxChain);
  if (v == var::t) return "t";
  if (v == var::s) return "s";
  return "?";
}

namespace {
std::optional<int> indexed(std::string_view name, std::string_view prefix, int limit) {
  if (!name.starts_with(prefix)) return std::nullopt;
  auto digits = name.substr(prefix.size());
  int i = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || i < 1 || i > limit) return std::nullopt;
  return i;
}
}  // namespace

std::optional<int> parse_var_name(std::string_view name) {
  if (name == "q") return var::q;
  if (name == "z") return var::z;
  if (name == "T") return var::T;
  if (name == "t") return var::t;
  if (name == "s") return var::s;
  if (auto i = indexed(name, "alpha_", 2 * kMaxGenus)) return var::alpha(*i);
  if (auto i = indexed(name, "z_", kMaxChain)) return var::zi(*i);
  if (auto i = indexed(name, "u_", kMaxChain)) return var::u(*i);
  return std::nullopt;
}

}  // namespace census
