#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "census/variables.hpp"

namespace census {

/// Laurent monomial over the fixed ambient variable set. Exponents may be
/// negative; a zero exponent means the variable is absent.
class Monomial {
 public:
  using Exponents = std::array<std::int16_t, kNumVars>;

  Monomial() = default;
  explicit Monomial(const Exponents& e) : exp_(e) {}

  static Monomial of(int v, int power = 1) {
    Monomial m;
    m.exp_[v] = static_cast<std::int16_t>(power);
    return m;
  }

  int operator[](int v) const { return exp_[v]; }
  void set(int v, int power) { exp_[v] = static_cast<std::int16_t>(power); }
  const Exponents& exponents() const { return exp_; }

  bool is_one() const;
  int total_degree() const;
  bool mentions(int v) const { return exp_[v] != 0; }
  /// First variable (in canonical order) with a nonzero exponent, or -1.
  int leading_var() const;
  Monomial without(int v) const {
    Monomial m = *this;
    m.exp_[v] = 0;
    return m;
  }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// Componentwise minimum / maximum of exponents.
  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;
  std::string to_string() const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic order over the canonical variable order.
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  Exponents exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace census
