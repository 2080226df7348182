#include "census/ztruncated.hpp"

#include <algorithm>

#include "census/error.hpp"

namespace census {

namespace {
const FactoredRat kZero;

int meet(int a, int b) {
  if (a == ZTruncated::kExact) return b;
  if (b == ZTruncated::kExact) return a;
  return std::min(a, b);
}
}  // namespace

ZTruncated::ZTruncated(const FactoredRat& c) {
  if (c.mentions(var::z)) throw Error(ErrorKind::InvalidArgument, "scalar coefficient mentions z");
  if (!c.is_zero()) coeffs_.push_back(c);
}

ZTruncated::ZTruncated(std::vector<FactoredRat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order_ < kExact) throw Error(ErrorKind::InvalidArgument, "bad truncation order");
  trim();
}

ZTruncated ZTruncated::expand(const FactoredRat& f, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  return ZTruncated(f.expand_in(var::z, 0, order), order);
}

void ZTruncated::trim() {
  if (order_ != kExact && static_cast<int>(coeffs_.size()) > order_ + 1) coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const FactoredRat& ZTruncated::operator[](int k) const {
  return k >= 0 && k < stored() ? coeffs_[static_cast<std::size_t>(k)] : kZero;
}

bool ZTruncated::is_zero() const { return coeffs_.empty(); }

bool ZTruncated::is_one() const { return coeffs_.size() == 1 && coeffs_.front().equals(1); }

ZTruncated ZTruncated::operator-() const {
  ZTruncated r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ZTruncated ZTruncated::operator+(const ZTruncated& o) const {
  ZTruncated r;
  r.order_ = meet(order_, o.order_);
  int n = std::max(stored(), o.stored());
  r.coeffs_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) r.coeffs_[static_cast<std::size_t>(k)] = (*this)[k] + o[k];
  r.trim();
  return r;
}

ZTruncated ZTruncated::operator-(const ZTruncated& o) const { return *this + (-o); }

ZTruncated ZTruncated::operator*(const ZTruncated& o) const {
  ZTruncated r;
  r.order_ = meet(order_, o.order_);
  if (is_zero() || o.is_zero()) return r;
  int n = stored() + o.stored() - 1;
  if (r.order_ != kExact) n = std::min(n, r.order_ + 1);
  r.coeffs_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < stored(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < o.stored() && i + j < n; ++j) {
      if (o.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(i + j)] += coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  r.trim();
  return r;
}

ZTruncated ZTruncated::scaled(const Rational& c) const {
  ZTruncated r = *this;
  for (auto& x : r.coeffs_) x = x.scaled(c);
  r.trim();
  return r;
}

ZTruncated ZTruncated::adams(int k) const {
  ZTruncated r;
  r.order_ = order_;
  if (is_zero()) return r;
  int n = (stored() - 1) * k + 1;
  if (order_ != kExact) n = std::min(n, order_ + 1);
  r.coeffs_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i * k < n; ++i) r.coeffs_[static_cast<std::size_t>(i * k)] = (*this)[i].adams(k);
  r.trim();
  return r;
}

ZTruncated ZTruncated::exp() const {
  if (!augmented()) throw Error(ErrorKind::NotAugmented, "z^0 coefficient must vanish");
  if (is_zero()) {
    ZTruncated one(1);
    one.order_ = order_;
    return one;
  }
  if (exact()) throw Error(ErrorKind::InvalidArgument, "exp of a nonconstant exact series");
  // n g_n = Σ_{j=1}^{n} j f_j g_{n-j}
  std::vector<FactoredRat> g(static_cast<std::size_t>(order_) + 1);
  g[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    FactoredRat acc;
    for (int j = 1; j <= n; ++j)
      if (!(*this)[j].is_zero()) acc += (*this)[j].scaled(j) * g[static_cast<std::size_t>(n - j)];
    g[static_cast<std::size_t>(n)] = acc.scaled(Rational(1, n));
  }
  return ZTruncated(std::move(g), order_);
}

bool ZTruncated::operator==(const ZTruncated& o) const {
  int n = std::max(stored(), o.stored());
  int limit = meet(order_, o.order_);
  if (limit != kExact) n = std::min(n, limit + 1);
  for (int k = 0; k < n; ++k)
    if (!(*this)[k].equals(o[k])) return false;
  return true;
}

std::string ZTruncated::to_string() const {
  std::string s;
  for (int k = 0; k < stored(); ++k) {
    if ((*this)[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "[" + (*this)[k].to_string() + "]*z^" + std::to_string(k);
  }
  if (s.empty()) s = "0";
  if (!exact()) s += " + O(z^" + std::to_string(order_ + 1) + ")";
  return s;
}

}  // namespace census
