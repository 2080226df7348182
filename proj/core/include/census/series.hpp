#pragma once

#include <string>
#include <vector>

#include "census/error.hpp"
#include "census/rational.hpp"

namespace census {

/// Möbius function.
int mobius(int n);

namespace detail {
template <class C>
bool coefficient_is_one(const C& c) {
  if constexpr (requires { c.is_one(); })
    return c.is_one();
  else
    return c.equals(C(1));
}
}  // namespace detail

/// Series Σ_{k<=R} c_k T^k. The coefficient ring C needs +, -, *, scaled,
/// adams and is_zero; Adams maps act on T as T -> T^k.
template <class C>
class BiSeries {
 public:
  explicit BiSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative T-order");
  }
  BiSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "empty series");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  C& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  BiSeries operator+(const BiSeries& o) const {
    BiSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k] + o[k];
    return r;
  }
  BiSeries operator-(const BiSeries& o) const {
    BiSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k] - o[k];
    return r;
  }
  BiSeries operator*(const BiSeries& o) const {
    BiSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if ((*this)[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order(); ++j)
        if (!o[j].is_zero()) r[i + j] += (*this)[i] * o[j];
    }
    return r;
  }
  BiSeries scaled(const Rational& c) const {
    BiSeries r = *this;
    for (auto& x : r.coeffs_) x = x.scaled(c);
    return r;
  }
  /// ψ_k on coefficients and on T, truncated at the same order.
  BiSeries adams(int k) const {
    BiSeries r(order());
    for (int i = 0; i * k <= order(); ++i) r[i * k] = (*this)[i].adams(k);
    return r;
  }

  bool operator==(const BiSeries& o) const {
    if (order() != o.order()) return false;
    for (int k = 0; k <= order(); ++k)
      if (!((*this)[k] - o[k]).is_zero()) return false;
    return true;
  }

 private:
  std::vector<C> coeffs_;
};

/// T-adic logarithm of a series with constant term 1.
template <class C>
BiSeries<C> series_log(const BiSeries<C>& f) {
  if (!detail::coefficient_is_one(f[0])) throw Error(ErrorKind::NotUnitConstantTerm, "log needs c_0 = 1");
  // h_k = f_k - (1/k) Σ_{j<k} j h_j f_{k-j}
  BiSeries<C> h(f.order());
  for (int k = 1; k <= f.order(); ++k) {
    C acc;
    for (int j = 1; j < k; ++j)
      if (!h[j].is_zero() && !f[k - j].is_zero()) acc += (h[j] * f[k - j]).scaled(j);
    h[k] = f[k] - acc.scaled(Rational(1, k));
  }
  return h;
}

/// T-adic exponential of a series whose constant term is augmented (zero,
/// or for z-series zero at z = 0).
template <class C>
BiSeries<C> series_exp(const BiSeries<C>& f) {
  BiSeries<C> g(f.order());
  if (f[0].is_zero()) {
    g[0] = C(1);
  } else if constexpr (requires { f[0].exp(); }) {
    g[0] = f[0].exp();
  } else {
    throw Error(ErrorKind::NotAugmented, "exp needs c_0 = 0");
  }
  // k g_k = Σ_{j=1}^{k} j f_j g_{k-j}
  for (int k = 1; k <= f.order(); ++k) {
    C acc;
    for (int j = 1; j <= k; ++j)
      if (!f[j].is_zero() && !g[k - j].is_zero()) acc += (f[j] * g[k - j]).scaled(j);
    g[k] = acc.scaled(Rational(1, k));
  }
  return g;
}

/// Exp(f) = exp(Σ_k ψ_k(f)/k).
template <class C>
BiSeries<C> pleth_exp(const BiSeries<C>& f) {
  if constexpr (requires { f[0].augmented(); }) {
    if (!f[0].augmented()) throw Error(ErrorKind::NotAugmented, "Exp needs an augmented series");
  } else {
    if (!f[0].is_zero()) throw Error(ErrorKind::NotAugmented, "Exp needs c_0 = 0");
  }
  BiSeries<C> sum(f.order());
  // With c_0 != 0 (z-series) every ψ_k contributes; otherwise k <= R suffices.
  const bool deep = !f[0].is_zero();
  int kmax = f.order();
  if constexpr (requires { f[0].order(); }) {
    if (deep) kmax = std::max(kmax, f[0].order());
  }
  for (int k = 1; k <= std::max(kmax, 1); ++k) sum = sum + f.adams(k).scaled(Rational(1, k));
  return series_exp(sum);
}

/// Log(f) = Σ_k μ(k)/k ψ_k(log f).
template <class C>
BiSeries<C> pleth_log(const BiSeries<C>& f) {
  BiSeries<C> l = series_log(f);
  BiSeries<C> out(f.order());
  for (int k = 1; k <= f.order(); ++k) {
    int mu = mobius(k);
    if (mu != 0) out = out + l.adams(k).scaled(Rational(mu, k));
  }
  return out;
}

}  // namespace census
