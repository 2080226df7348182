#pragma once

#include <complex>
#include <string>
#include <vector>

#include "census/monomial.hpp"
#include "census/rational.hpp"
#include "census/sparse_poly.hpp"

namespace census {

/// The binomial factor (1 - constant * shape). Normal form: shape is not the
/// unit monomial and its leading variable carries a positive exponent.
struct Atom {
  Rational constant;
  Monomial shape;

  SparsePoly as_poly() const;
  Atom adams(int k) const { return {constant, shape.pow(k)}; }
  std::string to_string() const;

  bool operator==(const Atom&) const = default;
  std::strong_ordering operator<=>(const Atom& o) const;
};

/// (1 - c*m) == scale * mono * (1 - atom.constant * atom.shape)
struct AtomNormalForm {
  Atom atom;
  Rational scale;
  Monomial mono;
};
/// Requires m to be a nonconstant monomial.
AtomNormalForm normal_form(const Rational& c, const Monomial& m);

struct AtomPower {
  Atom atom;
  int multiplicity = 1;
  bool operator==(const AtomPower&) const = default;
};

/// Rational function  prefactor * numerator / prod(atom^multiplicity).
///
/// Every public operation returns a normalized value: no denominator atom
/// divides the numerator, the numerator carries no common monomial content
/// (that lives in the prefactor), and zero has an empty denominator.
class FactoredRat {
 public:
  FactoredRat() = default;  // zero
  FactoredRat(const Rational& c);  // NOLINT
  FactoredRat(int c) : FactoredRat(Rational(c)) {}
  FactoredRat(const SparsePoly& p);  // NOLINT
  static FactoredRat monomial(const Rational& c, const Monomial& m);
  /// 1 - c*m as a numerator.
  static FactoredRat binomial(const Rational& c, const Monomial& m);
  /// 1 / (1 - c*m); throws InvalidArgument if c*m == 1.
  static FactoredRat inverse_binomial(const Rational& c, const Monomial& m, int multiplicity = 1);
  /// Builds and normalizes an arbitrary representation.
  static FactoredRat from_parts(const Monomial& prefactor, SparsePoly numerator,
                                std::vector<AtomPower> denominator);

  const Monomial& prefactor() const { return prefactor_; }
  const SparsePoly& numerator() const { return numerator_; }
  const std::vector<AtomPower>& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  /// Denominator-free (a Laurent polynomial).
  bool is_polynomial() const { return denominator_.empty(); }
  /// prefactor * numerator when is_polynomial().
  SparsePoly to_poly() const;
  bool mentions(int v) const;
  int denominator_atoms() const;

  FactoredRat operator-() const;
  FactoredRat operator+(const FactoredRat& o) const;
  FactoredRat operator-(const FactoredRat& o) const;
  FactoredRat operator*(const FactoredRat& o) const;
  FactoredRat& operator+=(const FactoredRat& o) { return *this = *this + o; }
  FactoredRat& operator-=(const FactoredRat& o) { return *this = *this - o; }
  FactoredRat& operator*=(const FactoredRat& o) { return *this = *this * o; }
  FactoredRat scaled(const Rational& c) const;
  FactoredRat pow(int k) const;
  /// Inverse of a value whose numerator is a single term.
  FactoredRat inverse_of_monomial() const;

  /// Ring map x -> x^k on every ambient variable; rational constants fixed.
  FactoredRat adams(int k) const;
  /// Exact substitution v -> c*m followed by normalization. Throws
  /// SubstitutionToZeroPole if a denominator atom becomes identically zero.
  FactoredRat substitute(int v, const Rational& c, const Monomial& m) const;

  /// Evaluates in factored form. Throws PoleAtPoint if an atom is within
  /// 1e-12 of zero.
  std::complex<double> evaluate(const Assignment& at) const;

  /// Coefficients of v^lo .. v^hi of the expansion around v = 0, each free of
  /// v. Atoms in v are expanded as geometric series.
  std::vector<FactoredRat> expand_in(int v, int lo, int hi) const;
  /// Lowest power of v that can occur in expand_in (prefactor + numerator).
  int valuation_bound(int v) const;

  /// Value equality (a - b == 0), independent of representation.
  bool equals(const FactoredRat& o) const { return (*this - o).is_zero(); }
  /// Structural equality of the normalized representation.
  bool operator==(const FactoredRat&) const = default;

  std::string to_string() const;

 private:
  void normalize();

  Monomial prefactor_;
  SparsePoly numerator_;
  std::vector<AtomPower> denominator_;  // sorted by atom, multiplicities > 0
};

}  // namespace census
