#pragma once

#include <string>
#include <vector>

#include "census/factored_rat.hpp"

namespace census {

/// Power series in z with FactoredRat coefficients, known modulo z^{order+1}.
/// A scalar (constant in z) has infinite order; mixing orders keeps the
/// smaller one.
class ZTruncated {
 public:
  static constexpr int kExact = -1;

  ZTruncated() = default;  // exact zero
  ZTruncated(const FactoredRat& c);  // NOLINT: exact scalar
  ZTruncated(int c) : ZTruncated(FactoredRat(c)) {}
  ZTruncated(std::vector<FactoredRat> coeffs, int order);
  /// Expands a rational function in z around z = 0 to z^order.
  static ZTruncated expand(const FactoredRat& f, int order);

  int order() const { return order_; }
  bool exact() const { return order_ == kExact; }
  /// Coefficient of z^k (zero beyond the stored range).
  const FactoredRat& operator[](int k) const;
  int stored() const { return static_cast<int>(coeffs_.size()); }

  bool is_zero() const;
  bool is_one() const;
  /// True when the z^0 coefficient vanishes.
  bool augmented() const { return coeffs_.empty() || coeffs_.front().is_zero(); }

  ZTruncated operator-() const;
  ZTruncated operator+(const ZTruncated& o) const;
  ZTruncated operator-(const ZTruncated& o) const;
  ZTruncated operator*(const ZTruncated& o) const;
  ZTruncated& operator+=(const ZTruncated& o) { return *this = *this + o; }
  ZTruncated& operator-=(const ZTruncated& o) { return *this = *this - o; }
  ZTruncated& operator*=(const ZTruncated& o) { return *this = *this * o; }
  ZTruncated scaled(const Rational& c) const;
  ZTruncated adams(int k) const;
  /// exp of a series with vanishing z^0 coefficient.
  ZTruncated exp() const;

  bool operator==(const ZTruncated& o) const;
  std::string to_string() const;

 private:
  void trim();

  std::vector<FactoredRat> coeffs_;
  int order_ = kExact;
};

}  // namespace census
