#include "census/sparse_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "census/error.hpp"
#include "census/factored_rat.hpp"

namespace census {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::InvalidArgument, "0 raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

SparsePoly::SparsePoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

SparsePoly::SparsePoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  SparsePoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational SparsePoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return 0;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      p.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) p.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return p;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times(o.terms_[0].mono).scaled(o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times(terms_[0].mono).scaled(terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  Rational prod;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      mpq_mul(prod.get_mpq_t(), a.coeff.get_mpq_t(), b.coeff.get_mpq_t());
      auto [it, fresh] = acc.try_emplace(a.mono * b.mono, prod);
      if (!fresh) it->second += prod;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  SparsePoly p;
  p.terms_ = std::move(out);
  return p;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

SparsePoly SparsePoly::times(const Monomial& m) const {
  // Multiplying by a monomial preserves the grlex order.
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.mono *= m;
  return p;
}

SparsePoly SparsePoly::pow(int k) const {
  SparsePoly result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::adams(int k) const {
  if (k == 1) return *this;
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono.pow(k);
  // x -> x^k scales every degree by k; lex ties keep their order for k > 0.
  return p;
}

SparsePoly SparsePoly::substitute(int v, const Rational& c, const Monomial& m) const {
  if (!mentions(v)) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono[v];
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    out.push_back({t.mono.without(v) * m.pow(e), t.coeff * census::pow(c, e)});
  }
  return from_terms(std::move(out));
}

Monomial SparsePoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

int SparsePoly::max_degree(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    d = first ? t.mono[v] : std::max(d, t.mono[v]);
    first = false;
  }
  return d;
}

int SparsePoly::min_degree(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    d = first ? t.mono[v] : std::min(d, t.mono[v]);
    first = false;
  }
  return d;
}

bool SparsePoly::mentions(int v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
}

std::optional<SparsePoly> SparsePoly::divide_by(const Atom& atom) const {
  if (is_zero()) return SparsePoly{};
  const int x = atom.shape.leading_var();
  const int e = atom.shape[x];  // > 0 in atom normal form
  const Monomial rest = atom.shape.without(x);

  // Slice the dividend by the exponent of x. Quotient coefficients satisfy
  //   Q_j = N_j + c * rest * Q_{j-e},
  // solved bottom-up; the top e slices of N must then be matched exactly.
  std::map<int, std::vector<Term>> raw;
  for (const auto& t : terms_) raw[t.mono[x]].push_back({t.mono.without(x), t.coeff});
  std::map<int, SparsePoly> slices;
  for (auto& [k, ts] : raw) slices.emplace(k, from_terms(std::move(ts)));

  const int lo = slices.begin()->first;
  const int hi = slices.rbegin()->first;
  if (hi - lo < e) return std::nullopt;

  std::map<int, SparsePoly> quot;
  auto slice = [&](const std::map<int, SparsePoly>& m, int k) -> const SparsePoly* {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  };
  for (int j = lo; j <= hi - e; ++j) {
    SparsePoly qj;
    if (auto* n = slice(slices, j)) qj = *n;
    if (auto* prev = slice(quot, j - e)) qj += prev->times(rest).scaled(atom.constant);
    if (!qj.is_zero()) quot.emplace(j, std::move(qj));
  }
  for (int j = hi - e + 1; j <= hi; ++j) {
    SparsePoly lhs;
    if (auto* n = slice(slices, j)) lhs = *n;
    SparsePoly rhs;
    if (auto* prev = slice(quot, j - e)) rhs = prev->times(rest).scaled(atom.constant);
    if (!(lhs + rhs).is_zero()) return std::nullopt;
  }

  std::vector<Term> out;
  for (auto& [j, qj] : quot)
    for (const auto& t : qj.terms()) out.push_back({t.mono * Monomial::of(x, j), t.coeff});
  return from_terms(std::move(out));
}

std::complex<double> SparsePoly::evaluate(const Assignment& at) const {
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> term = t.coeff.get_d();
    for (int v = 0; v < kNumVars; ++v) {
      int e = t.mono[v];
      if (e == 0) continue;
      auto it = at.find(v);
      if (it == at.end()) throw Error(ErrorKind::InvalidArgument, "unassigned variable " + var_name(v));
      term *= std::pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string c = it->coeff.get_str();
    bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (it->mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += it->mono.to_string();
    }
  }
  return out;
}

}  // namespace census
