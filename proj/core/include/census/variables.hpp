#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace census {

// Fixed ambient variable layout. The index order is the canonical variable
// order used for monomial comparison and serialization:
//   alpha_1 < ... < alpha_12 < q < z < T < z_1 < ... < z_6 < u_1 < ... < u_6 < t < s
inline constexpr int kMaxGenus = 6;
inline constexpr int kMaxChain = 6;
inline constexpr int kNumVars = 2 * kMaxGenus + 3 + 2 * kMaxChain + 2;

namespace var {
constexpr int alpha(int i) { return i - 1; }  // 1-based, i <= 2*kMaxGenus
inline constexpr int q = 2 * kMaxGenus;
inline constexpr int z = q + 1;
inline constexpr int T = q + 2;
constexpr int zi(int i) { return T + i; }              // 1-based
constexpr int u(int i) { return T + kMaxChain + i; }   // 1-based
inline constexpr int t = T + 2 * kMaxChain + 1;
inline constexpr int s = t + 1;
}  // namespace var

static_assert(var::s == kNumVars - 1);

std::string var_name(int v);
std::optional<int> parse_var_name(std::string_view name);

}  // namespace census
