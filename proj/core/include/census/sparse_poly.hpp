#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "census/monomial.hpp"
#include "census/rational.hpp"

namespace census {

struct Atom;

/// Numeric values for the ambient variables; absent entries are unassigned.
using Assignment = std::map<int, std::complex<double>>;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Terms are kept sorted by the graded lexicographic monomial order with no
/// zero coefficients, so structural equality is value equality.
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  SparsePoly() = default;
  SparsePoly(const Rational& c);  // NOLINT: constants convert implicitly
  SparsePoly(int c) : SparsePoly(Rational(c)) {}
  explicit SparsePoly(const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros.
  static SparsePoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (coefficient of the unit monomial).
  Rational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly scaled(const Rational& c) const;
  SparsePoly times(const Monomial& m) const;
  SparsePoly pow(int k) const;

  /// Ring map raising every variable to the k-th power.
  SparsePoly adams(int k) const;
  /// Replaces v by c*m (m must not mention v).
  SparsePoly substitute(int v, const Rational& c, const Monomial& m) const;

  /// Componentwise minimum exponent over all terms (1 for the zero poly).
  Monomial min_exponents() const;
  int max_degree(int v) const;
  int min_degree(int v) const;
  bool mentions(int v) const;

  /// Exact quotient by the binomial (1 - c*m) if it divides, else nullopt.
  std::optional<SparsePoly> divide_by(const Atom& atom) const;

  std::complex<double> evaluate(const Assignment& at) const;
  std::string to_string() const;

  bool operator==(const SparsePoly&) const = default;

 private:
  std::vector<Term> terms_;
};

}  // namespace census
