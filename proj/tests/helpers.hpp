#pragma once

#include <complex>
#include <ostream>
#include <random>

#include "census/curve_zeta.hpp"
#include "census/factored_rat.hpp"
#include "census/sparse_poly.hpp"
#include "census/variables.hpp"

namespace census {

// Readable gtest failure messages.
inline void PrintTo(const SparsePoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const FactoredRat& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace census

namespace census::test {

inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Monomial mono(int v, int k = 1) { return Monomial::of(v, k); }
inline SparsePoly P(int v, int k = 1) { return SparsePoly(mono(v, k)); }
inline FactoredRat F(int v, int k = 1) { return FactoredRat(P(v, k)); }
inline FactoredRat one_minus(const Rational& c, const Monomial& m) { return FactoredRat::binomial(c, m); }
inline FactoredRat over(const Rational& c, const Monomial& m, int mult = 1) {
  return FactoredRat::inverse_binomial(c, m, mult);
}

// Small random values in α_1, q, z with a couple of binomial denominators.
class RandomRat {
 public:
  explicit RandomRat(unsigned seed) : rng_(seed) {}

  SparsePoly poly() {
    static const int vars[] = {var::alpha(1), var::q, var::z};
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3), ex(0, 2);
    std::vector<SparsePoly::Term> terms;
    int n = nterms(rng_);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (int v : vars) m.set(v, ex(rng_));
      int c = coeff(rng_);
      Rational r(c == 0 ? 1 : c, 1 + (i % 2));
      r.canonicalize();
      terms.push_back({m, r});
    }
    return SparsePoly::from_terms(std::move(terms));
  }

  FactoredRat rat() {
    static const int vars[] = {var::alpha(1), var::q, var::z};
    std::uniform_int_distribution<int> natoms(0, 2), pick(0, 2), ex(1, 2), cpick(0, 2);
    static const int consts[] = {1, -1, 2};
    std::vector<AtomPower> den;
    int n = natoms(rng_);
    for (int i = 0; i < n; ++i) {
      Monomial m = Monomial::of(vars[pick(rng_)], ex(rng_));
      if (pick(rng_) == 0) m.set(var::q, 1 + m[var::q]);
      den.push_back({{Rational(consts[cpick(rng_)]), m}, 1});
    }
    return FactoredRat::from_parts({}, poly(), std::move(den));
  }

  Assignment point() {
    std::uniform_real_distribution<double> re(-1.3, 1.3);
    Assignment a;
    for (int v : {var::alpha(1), var::q, var::z}) a[v] = {re(rng_), re(rng_)};
    return a;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace census::test
