#include "census/monomial.hpp"

#include <algorithm>

namespace census {

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

int Monomial::leading_var() const {
  for (int v = 0; v < kNumVars; ++v)
    if (exp_[v] != 0) return v;
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  m *= o;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int v = 0; v < kNumVars; ++v) exp_[v] = static_cast<std::int16_t>(exp_[v] + o.exp_[v]);
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp_[v] = static_cast<std::int16_t>(-exp_[v]);
  return m;
}

Monomial Monomial::pow(int k) const {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp_[v] = static_cast<std::int16_t>(exp_[v] * k);
  return m;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp_[v] = std::min(a.exp_[v], b.exp_[v]);
  return m;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp_[v] = std::max(a.exp_[v], b.exp_[v]);
  return m;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent words.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (exp_[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (exp_[v] != 1) out += '^' + std::to_string(exp_[v]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
  for (int v = 0; v < kNumVars; ++v)
    if (exp_[v] != o.exp_[v]) return exp_[v] <=> o.exp_[v];
  return std::strong_ordering::equal;
}

}  // namespace census
