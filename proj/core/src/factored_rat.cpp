#include "census/factored_rat.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "census/error.hpp"

namespace census {

SparsePoly Atom::as_poly() const { return SparsePoly(1) - SparsePoly(shape, constant); }

std::string Atom::to_string() const {
  std::string c = constant.get_str();
  if (constant == 1) return "(1 - " + shape.to_string() + ")";
  if (constant == -1) return "(1 + " + shape.to_string() + ")";
  return "(1 - " + c + "*" + shape.to_string() + ")";
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (auto c = shape <=> o.shape; c != 0) return c;
  int c = cmp(constant, o.constant);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

AtomNormalForm normal_form(const Rational& c, const Monomial& m) {
  const int lead = m.leading_var();
  if (lead < 0 || c == 0) throw Error(ErrorKind::InvalidArgument, "atom needs a nonconstant shape");
  if (m[lead] > 0) return {{c, m}, Rational(1), Monomial{}};
  // 1 - c m = (-c m) (1 - c^-1 m^-1)
  return {{Rational(1) / c, m.inverse()}, -c, m};
}

namespace {

void merge_atom(std::vector<AtomPower>& den, const Atom& a, int mult) {
  auto it = std::lower_bound(den.begin(), den.end(), a,
                             [](const AtomPower& p, const Atom& x) { return p.atom < x; });
  if (it != den.end() && it->atom == a) {
    it->multiplicity += mult;
  } else {
    den.insert(it, {a, mult});
  }
}

SparsePoly atom_power_poly(const Atom& a, int k) { return a.as_poly().pow(k); }

}  // namespace

FactoredRat::FactoredRat(const Rational& c) : numerator_(c) {}

FactoredRat::FactoredRat(const SparsePoly& p) : numerator_(p) { normalize(); }

FactoredRat FactoredRat::monomial(const Rational& c, const Monomial& m) {
  FactoredRat f(c);
  if (c != 0) f.prefactor_ = m;
  return f;
}

FactoredRat FactoredRat::binomial(const Rational& c, const Monomial& m) {
  return FactoredRat(SparsePoly(1) - SparsePoly(m, c));
}

FactoredRat FactoredRat::inverse_binomial(const Rational& c, const Monomial& m, int multiplicity) {
  if (m.is_one()) {
    Rational v = 1 - c;
    if (v == 0) throw Error(ErrorKind::InvalidArgument, "1/(1 - 1) is a pole");
    return FactoredRat(census::pow(Rational(1) / v, multiplicity));
  }
  auto nf = normal_form(c, m);
  FactoredRat f;
  f.numerator_ = SparsePoly(census::pow(Rational(1) / nf.scale, multiplicity));
  f.prefactor_ = nf.mono.inverse().pow(multiplicity);
  f.denominator_.push_back({nf.atom, multiplicity});
  f.normalize();
  return f;
}

FactoredRat FactoredRat::from_parts(const Monomial& prefactor, SparsePoly numerator,
                                    std::vector<AtomPower> denominator) {
  FactoredRat f;
  f.prefactor_ = prefactor;
  f.numerator_ = std::move(numerator);
  for (const auto& ap : denominator) {
    if (ap.multiplicity <= 0) throw Error(ErrorKind::InvalidArgument, "atom multiplicity must be positive");
    auto nf = normal_form(ap.atom.constant, ap.atom.shape);
    f.numerator_ = f.numerator_.scaled(census::pow(Rational(1) / nf.scale, ap.multiplicity));
    f.prefactor_ *= nf.mono.inverse().pow(ap.multiplicity);
    merge_atom(f.denominator_, nf.atom, ap.multiplicity);
  }
  f.normalize();
  return f;
}

void FactoredRat::normalize() {
  if (numerator_.is_zero()) {
    prefactor_ = Monomial{};
    denominator_.clear();
    return;
  }
  for (auto& ap : denominator_) {
    while (ap.multiplicity > 0) {
      auto q = numerator_.divide_by(ap.atom);
      if (!q) break;
      numerator_ = std::move(*q);
      --ap.multiplicity;
    }
  }
  std::erase_if(denominator_, [](const AtomPower& ap) { return ap.multiplicity == 0; });
  Monomial content = numerator_.min_exponents();
  if (!content.is_one()) {
    numerator_ = numerator_.times(content.inverse());
    prefactor_ *= content;
  }
}

SparsePoly FactoredRat::to_poly() const {
  if (!is_polynomial()) throw Error(ErrorKind::InvalidArgument, "value has a denominator");
  return numerator_.times(prefactor_);
}

bool FactoredRat::mentions(int v) const {
  if (prefactor_.mentions(v) || numerator_.mentions(v)) return true;
  return std::any_of(denominator_.begin(), denominator_.end(),
                     [v](const AtomPower& ap) { return ap.atom.shape.mentions(v); });
}

int FactoredRat::denominator_atoms() const {
  int n = 0;
  for (const auto& ap : denominator_) n += ap.multiplicity;
  return n;
}

FactoredRat FactoredRat::operator-() const {
  FactoredRat f = *this;
  f.numerator_ = -f.numerator_;
  return f;
}

FactoredRat FactoredRat::operator+(const FactoredRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;

  // Common denominator: atomwise maximum of multiplicities.
  std::vector<AtomPower> lcm;
  SparsePoly extra_a(1), extra_b(1);
  auto a = denominator_.begin(), b = o.denominator_.begin();
  while (a != denominator_.end() || b != o.denominator_.end()) {
    if (b == o.denominator_.end() || (a != denominator_.end() && a->atom < b->atom)) {
      lcm.push_back(*a);
      extra_b *= atom_power_poly(a->atom, a->multiplicity);
      ++a;
    } else if (a == denominator_.end() || b->atom < a->atom) {
      lcm.push_back(*b);
      extra_a *= atom_power_poly(b->atom, b->multiplicity);
      ++b;
    } else {
      int m = std::max(a->multiplicity, b->multiplicity);
      lcm.push_back({a->atom, m});
      if (m > a->multiplicity) extra_a *= atom_power_poly(a->atom, m - a->multiplicity);
      if (m > b->multiplicity) extra_b *= atom_power_poly(b->atom, m - b->multiplicity);
      ++a;
      ++b;
    }
  }
  Monomial common = Monomial::min(prefactor_, o.prefactor_);
  FactoredRat f;
  f.prefactor_ = common;
  f.numerator_ = numerator_.times(prefactor_ * common.inverse()) * extra_a +
                 o.numerator_.times(o.prefactor_ * common.inverse()) * extra_b;
  f.denominator_ = std::move(lcm);
  f.normalize();
  return f;
}

FactoredRat FactoredRat::operator-(const FactoredRat& o) const { return *this + (-o); }

FactoredRat FactoredRat::operator*(const FactoredRat& o) const {
  if (is_zero() || o.is_zero()) return {};
  FactoredRat f;
  f.prefactor_ = prefactor_ * o.prefactor_;
  f.numerator_ = numerator_ * o.numerator_;
  f.denominator_ = denominator_;
  for (const auto& ap : o.denominator_) merge_atom(f.denominator_, ap.atom, ap.multiplicity);
  f.normalize();
  return f;
}

FactoredRat FactoredRat::scaled(const Rational& c) const {
  if (c == 0) return {};
  FactoredRat f = *this;
  f.numerator_ = f.numerator_.scaled(c);
  return f;
}

FactoredRat FactoredRat::pow(int k) const {
  if (k < 0) return inverse_of_monomial().pow(-k);
  FactoredRat result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

FactoredRat FactoredRat::inverse_of_monomial() const {
  if (!numerator_.is_monomial())
    throw Error(ErrorKind::InvalidArgument, "inverse needs a single-term numerator");
  const auto& t = numerator_.terms().front();
  FactoredRat f;
  f.prefactor_ = (prefactor_ * t.mono).inverse();
  SparsePoly num(Rational(1) / t.coeff);
  for (const auto& ap : denominator_) num *= atom_power_poly(ap.atom, ap.multiplicity);
  f.numerator_ = std::move(num);
  f.normalize();
  return f;
}

FactoredRat FactoredRat::adams(int k) const {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "Adams index must be positive");
  if (k == 1 || is_zero()) return *this;
  FactoredRat f;
  f.prefactor_ = prefactor_.pow(k);
  f.numerator_ = numerator_.adams(k);
  for (const auto& ap : denominator_) merge_atom(f.denominator_, ap.atom.adams(k), ap.multiplicity);
  f.normalize();
  return f;
}

FactoredRat FactoredRat::substitute(int v, const Rational& c, const Monomial& m) const {
  if (m.mentions(v)) throw Error(ErrorKind::InvalidArgument, "image mentions the substituted variable");
  if (c == 0) throw Error(ErrorKind::InvalidArgument, "substitution image must be nonzero");
  if (!mentions(v)) return *this;
  FactoredRat f;
  const int pe = prefactor_[v];
  f.prefactor_ = prefactor_.without(v) * m.pow(pe);
  f.numerator_ = numerator_.substitute(v, c, m).scaled(census::pow(c, pe));
  for (const auto& ap : denominator_) {
    const int e = ap.atom.shape[v];
    if (e == 0) {
      merge_atom(f.denominator_, ap.atom, ap.multiplicity);
      continue;
    }
    Rational k = ap.atom.constant * census::pow(c, e);
    Monomial shape = ap.atom.shape.without(v) * m.pow(e);
    if (shape.is_one()) {
      Rational value = 1 - k;
      if (value == 0)
        throw Error(ErrorKind::SubstitutionToZeroPole,
                    ap.atom.to_string() + " vanishes under " + var_name(v) + " -> " + c.get_str() +
                        "*" + m.to_string());
      f.numerator_ = f.numerator_.scaled(census::pow(Rational(1) / value, ap.multiplicity));
      continue;
    }
    auto nf = normal_form(k, shape);
    f.numerator_ = f.numerator_.scaled(census::pow(Rational(1) / nf.scale, ap.multiplicity));
    f.prefactor_ *= nf.mono.inverse().pow(ap.multiplicity);
    merge_atom(f.denominator_, nf.atom, ap.multiplicity);
  }
  f.normalize();
  return f;
}

std::complex<double> FactoredRat::evaluate(const Assignment& at) const {
  std::complex<double> value = SparsePoly(prefactor_).evaluate(at) * numerator_.evaluate(at);
  for (const auto& ap : denominator_) {
    std::complex<double> a = ap.atom.as_poly().evaluate(at);
    if (std::abs(a) < 1e-12) throw Error(ErrorKind::PoleAtPoint, ap.atom.to_string() + " vanishes");
    value /= std::pow(a, ap.multiplicity);
  }
  return value;
}

int FactoredRat::valuation_bound(int v) const {
  if (is_zero()) return 0;
  int low = prefactor_[v] + numerator_.min_degree(v);
  for (const auto& ap : denominator_) {
    int e = ap.atom.shape[v];
    if (e < 0) low -= e * ap.multiplicity;  // atom flips to -c m (1 - ...)
  }
  return low;
}

std::vector<FactoredRat> FactoredRat::expand_in(int v, int lo, int hi) const {
  std::vector<FactoredRat> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  if (is_zero() || hi < lo) return out;

  // prefactor * numerator, with v-atoms rewritten so v has a positive exponent.
  SparsePoly body = numerator_.times(prefactor_);
  std::vector<AtomPower> rest;
  std::vector<AtomPower> series;
  for (const auto& ap : denominator_) {
    int e = ap.atom.shape[v];
    if (e == 0) {
      rest.push_back(ap);
    } else if (e > 0) {
      series.push_back(ap);
    } else {
      // 1/(1 - c m) = -(1/c) m^-1 / (1 - c^-1 m^-1)
      Rational s = census::pow(-Rational(1) / ap.atom.constant, ap.multiplicity);
      body = body.times(ap.atom.shape.inverse().pow(ap.multiplicity)).scaled(s);
      series.push_back({{Rational(1) / ap.atom.constant, ap.atom.shape.inverse()}, ap.multiplicity});
    }
  }
  auto truncate = [&](const SparsePoly& p) {
    std::vector<SparsePoly::Term> keep;
    for (const auto& t : p.terms())
      if (t.mono[v] <= hi) keep.push_back(t);
    return SparsePoly::from_terms(std::move(keep));
  };
  body = truncate(body);
  const int base = body.is_zero() ? 0 : body.min_degree(v);
  for (const auto& ap : series) {
    const int e = ap.atom.shape[v];
    const int terms = (hi - base) / e;
    // 1/(1 - w)^m = sum_n binom(n + m - 1, m - 1) w^n
    std::vector<SparsePoly::Term> geo;
    for (int n = 0; n <= terms; ++n) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + ap.multiplicity - 1),
                   static_cast<unsigned long>(ap.multiplicity - 1));
      geo.push_back({ap.atom.shape.pow(n), Rational(b) * census::pow(ap.atom.constant, n)});
    }
    body = truncate(body * SparsePoly::from_terms(std::move(geo)));
  }
  std::map<int, std::vector<SparsePoly::Term>> slices;
  for (const auto& t : body.terms()) {
    int d = t.mono[v];
    if (d < lo) throw Error(ErrorKind::InvalidArgument, "expansion has powers of " + var_name(v) + " below the requested range");
    slices[d].push_back({t.mono.without(v), t.coeff});
  }
  for (auto& [d, ts] : slices)
    out[static_cast<std::size_t>(d - lo)] = from_parts(Monomial{}, SparsePoly::from_terms(std::move(ts)), rest);
  return out;
}

std::string FactoredRat::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (!prefactor_.is_one()) s += prefactor_.to_string() + " * ";
  s += "(" + numerator_.to_string() + ")";
  if (!denominator_.empty()) {
    s += " / ";
    for (const auto& ap : denominator_) {
      s += ap.atom.to_string();
      if (ap.multiplicity > 1) s += "^" + std::to_string(ap.multiplicity);
    }
  }
  return s;
}

}  // namespace census
