#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "census/factored_rat.hpp"
#include "census/partition.hpp"
#include "census/rational.hpp"
#include "census/series.hpp"

namespace census {

// The Weil numbers come in pairs α_{2i-1} α_{2i} = q. The ring used here is
// Laurent polynomials in α_1, α_3, ..., α_{2g-1} and q; α_{2i} is the monomial
// q α_{2i-1}^{-1}. Every α_i below refers to this reading.

/// α_i as a monomial (1-based i <= 2g).
Monomial alpha_monomial(int i);
/// Σ_i α_i as a polynomial.
SparsePoly alpha_sum(int g);
/// ∏_i (1 - c α_i).
SparsePoly alpha_product(int g, const Rational& c = 1, const Monomial& extra = {});
/// Assignment α_{2i-1} -> σ_{2i-1}, q -> q for numeric evaluation.
Assignment weil_assignment(int q, const std::vector<std::complex<double>>& sigma);

/// ζ(x) = ∏(1 - α_i x) / ((1 - x)(1 - q x)) at x = c*m.
/// Throws PoleArgument if a denominator factor is identically zero.
FactoredRat zeta_at(int g, const Rational& c, const Monomial& m);
/// ζ at q^{-u} z^v.
FactoredRat zeta_value(int g, int u, int v);
/// As zeta_value, except at (1,0): ∏(1 - α_i^{-1}) / (1 - q^{-1}).
FactoredRat zeta_star(int g, int u, int v);
/// ζ̃(x) = x^{1-g} ζ(x).
FactoredRat zeta_tilde(int g, const Rational& c, const Monomial& m);
/// ∏ over boxes of ζ*(1 + leg, arm).
FactoredRat j_factor(int g, const Partition& lambda);

struct CurveData {
  int q = 0;
  int genus = 0;
  std::vector<long long> point_counts;                // N_1..N_g
  std::vector<Integer> numerator;                      // a_0..a_{2g}
  std::vector<std::complex<double>> weil_numbers;      // σ_{2i-1} σ_{2i} = q

  Assignment assignment() const { return weil_assignment(q, weil_numbers); }
};

/// Newton identities for the numerator, functional equation for its upper
/// half, companion-matrix roots for the σ_i. Throws NotWeil when the counts
/// are inconsistent with a curve.
CurveData weil_from_counts(int q, const std::vector<long long>& counts);
/// {"q": int, "genus": int, "point_counts": [N_1..N_g]}
CurveData curve_from_json(const std::string& text);
CurveData curve_from_file(const std::string& path);
/// Datum whose numerator is ∏(1 - a z + q z^2) over the given traces
/// (each |a| <= 2 sqrt(q)).
CurveData product_curve(int q, const std::vector<int>& traces);
/// product_curve over F_7 with g distinct traces; g <= 6.
CurveData sample_curve(int g);

/// q^{(g-1)(r^2-1)} ∏(1 - α_i) ζ(q^{-2})...ζ(q^{-r}) / (q - 1).
FactoredRat siegel_volume(int g, int r);

using ZetaFn = std::function<FactoredRat(int g, const Rational& c, const Monomial& m)>;

/// Exp((1 - Σα_i + q) s / (q - 1)) to s^L; coefficient k is the s^k term.
BiSeries<FactoredRat> torsion_volume_series(int g, int L);
/// ∏_{i=1}^{M} ζ(q^{-i} s) expanded to s^L. Each factor is 1 + O(s) with an
/// s-coefficient of q-adic size q^{-i}, so this only matches the full product
/// as M grows; exactly, it equals Exp(|X| (1 - q^{-M}) s / (q - 1)).
BiSeries<FactoredRat> torsion_product_series(int g, int L, int M, const ZetaFn& zeta = zeta_at);
/// exp(Σ_l (1 - Σα_i^l + q^l) s^l / (l (q^l - 1))), the infinite product
/// summed factor by factor in log form.
BiSeries<FactoredRat> torsion_heine_series(int g, int L);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Torsion-volume identity and Siegel-formula instantiations. With
/// throw_on_failure the first failure raises IdentityViolation.
std::vector<IdentityCheck> check_identities(int g, int L, const ZetaFn& zeta = zeta_at,
                                            bool throw_on_failure = false);

}  // namespace census
