#include "census/curve_zeta.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "census/error.hpp"

namespace census {

namespace {

void check_genus(int g) {
  if (g < 0 || g > kMaxGenus)
    throw Error(ErrorKind::InvalidArgument, "genus must lie in 0.." + std::to_string(kMaxGenus));
}

Monomial qpow(int e) { return Monomial::of(var::q, e); }

}  // namespace

Monomial alpha_monomial(int i) {
  if (i % 2 == 1) return Monomial::of(var::alpha(i));
  return Monomial::of(var::alpha(i - 1), -1) * qpow(1);
}

SparsePoly alpha_sum(int g) {
  check_genus(g);
  SparsePoly s;
  for (int i = 1; i <= 2 * g; ++i) s += SparsePoly(alpha_monomial(i));
  return s;
}

SparsePoly alpha_product(int g, const Rational& c, const Monomial& extra) {
  check_genus(g);
  SparsePoly p(1);
  for (int i = 1; i <= 2 * g; ++i) p *= SparsePoly(1) - SparsePoly(alpha_monomial(i) * extra, c);
  return p;
}

Assignment weil_assignment(int q, const std::vector<std::complex<double>>& sigma) {
  Assignment at;
  at[var::q] = static_cast<double>(q);
  for (std::size_t i = 0; i < sigma.size(); i += 2) at[var::alpha(static_cast<int>(i) + 1)] = sigma[i];
  return at;
}

FactoredRat zeta_at(int g, const Rational& c, const Monomial& m) {
  check_genus(g);
  if (c == 0) throw Error(ErrorKind::PoleArgument, "zero argument");
  if (m.is_one() && c == 1) throw Error(ErrorKind::PoleArgument, "factor (1 - x) vanishes identically");
  Monomial qm = qpow(1) * m;
  if (qm.is_one() && c == 1) throw Error(ErrorKind::PoleArgument, "factor (1 - q x) vanishes identically");
  FactoredRat num(alpha_product(g, c, m));
  return num * FactoredRat::inverse_binomial(c, m) * FactoredRat::inverse_binomial(c, qm);
}

FactoredRat zeta_value(int g, int u, int v) {
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "z-exponent must be nonnegative");
  return zeta_at(g, 1, qpow(-u) * Monomial::of(var::z, v));
}

FactoredRat zeta_star(int g, int u, int v) {
  if (u == 1 && v == 0) {
    check_genus(g);
    // ∏(1 - α_i^{-1}) = q^{-g} ∏(1 - α_i) once the pairs multiply to q.
    return FactoredRat::monomial(1, qpow(-g)) * FactoredRat(alpha_product(g)) *
           FactoredRat::inverse_binomial(1, qpow(-1));
  }
  return zeta_value(g, u, v);
}

FactoredRat zeta_tilde(int g, const Rational& c, const Monomial& m) {
  return FactoredRat::monomial(census::pow(c, 1 - g), m.pow(1 - g)) * zeta_at(g, c, m);
}

FactoredRat j_factor(int g, const Partition& lambda) {
  FactoredRat j(1);
  for (const auto& b : box_stats(lambda)) j *= zeta_star(g, 1 + b.leg, b.arm);
  return j;
}

CurveData weil_from_counts(int q, const std::vector<long long>& counts) {
  const int g = static_cast<int>(counts.size());
  check_genus(g);
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be a prime power");
  CurveData c;
  c.q = q;
  c.genus = g;
  c.point_counts = counts;

  // p_l = Σ σ_i^l = 1 + q^l - N_l; k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<Integer> p(static_cast<std::size_t>(g) + 1), e(static_cast<std::size_t>(g) + 1);
  Integer ql = 1;
  for (int l = 1; l <= g; ++l) {
    if (counts[static_cast<std::size_t>(l - 1)] < 0) throw Error(ErrorKind::NotWeil, "negative point count");
    ql *= q;
    p[static_cast<std::size_t>(l)] = 1 + ql - Integer(std::to_string(counts[static_cast<std::size_t>(l - 1)]));
  }
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i) {
      Integer term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      acc += (i % 2 == 1) ? term : Integer(-term);
    }
    if (acc % k != 0) throw Error(ErrorKind::NotWeil, "Newton identities give a non-integral coefficient");
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  c.numerator.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  for (int k = 0; k <= g; ++k) c.numerator[static_cast<std::size_t>(k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)] : Integer(-e[static_cast<std::size_t>(k)]);
  for (int k = 0; k < g; ++k) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(g - k));
    c.numerator[static_cast<std::size_t>(2 * g - k)] = scale * c.numerator[static_cast<std::size_t>(k)];
  }
  if (g == 0) return c;

  // σ_i are the roots of z^{2g} P(1/z) = Σ a_k z^{2g-k}, which is monic.
  const int n = 2 * g;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int k = 1; k <= n; ++k) companion(n - k, n - 1) = -c.numerator[static_cast<std::size_t>(k)].get_d();
  Eigen::VectorXcd roots = companion.eigenvalues();

  const double modulus = std::sqrt(static_cast<double>(q));
  std::vector<std::complex<double>> pool(roots.data(), roots.data() + n);
  for (const auto& s : pool)
    if (std::abs(std::abs(s) - modulus) > 1e-6)
      throw Error(ErrorKind::NotWeil, "root of modulus " + std::to_string(std::abs(s)) + " differs from sqrt(q)");

  // Pair each root with the remaining root closest to q / root.
  std::sort(pool.begin(), pool.end(), [](auto a, auto b) { return a.imag() > b.imag(); });
  while (!pool.empty()) {
    auto s = pool.front();
    pool.erase(pool.begin());
    auto target = static_cast<double>(q) / s;
    auto best = std::min_element(pool.begin(), pool.end(),
                                 [&](auto a, auto b) { return std::abs(a - target) < std::abs(b - target); });
    if (std::abs(*best - target) > 1e-6) throw Error(ErrorKind::NotWeil, "Weil numbers do not pair to q");
    c.weil_numbers.push_back(s);
    c.weil_numbers.push_back(*best);
    pool.erase(best);
  }
  return c;
}

CurveData curve_from_json(const std::string& text) {
  int q = 0, g = 0;
  std::vector<long long> counts;
  try {
    auto j = nlohmann::json::parse(text);
    q = j.at("q").get<int>();
    g = j.at("genus").get<int>();
    counts = j.at("point_counts").get<std::vector<long long>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("curve file: ") + e.what());
  }
  if (static_cast<int>(counts.size()) != g)
    throw Error(ErrorKind::ParseError, "curve file: point_counts must list N_1..N_g");
  return weil_from_counts(q, counts);
}

CurveData curve_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open curve file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return curve_from_json(buf.str());
}

CurveData product_curve(int q, const std::vector<int>& traces) {
  // Each factor 1 - a z + q z^2 has power sums s_l = a s_{l-1} - q s_{l-2}.
  const int g = static_cast<int>(traces.size());
  std::vector<long long> counts(static_cast<std::size_t>(g), 0);
  long long ql = 1;
  for (int l = 1; l <= g; ++l) {
    ql *= q;
    counts[static_cast<std::size_t>(l - 1)] = 1 + ql;
  }
  for (int a : traces) {
    long long s0 = 2, s1 = a;
    for (int l = 1; l <= g; ++l) {
      counts[static_cast<std::size_t>(l - 1)] -= s1;
      long long next = a * s1 - q * s0;
      s0 = s1;
      s1 = next;
    }
  }
  return weil_from_counts(q, counts);
}

CurveData sample_curve(int g) {
  static const std::vector<int> traces = {0, 1, -1, 2, -2, 3};
  return product_curve(7, std::vector<int>(traces.begin(), traces.begin() + g));
}

FactoredRat siegel_volume(int g, int r) {
  check_genus(g);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  FactoredRat v = FactoredRat::monomial(1, qpow((g - 1) * (r * r - 1))) * FactoredRat(alpha_product(g)) *
                  FactoredRat::from_parts({}, SparsePoly(-1), {{{1, qpow(1)}, 1}});
  for (int k = 2; k <= r; ++k) v *= zeta_value(g, k, 0);
  return v;
}

BiSeries<FactoredRat> torsion_volume_series(int g, int L) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
  // (1 - Σα_i + q) / (q - 1) = -(1 - Σα_i + q) / (1 - q)
  BiSeries<FactoredRat> f(L);
  f[1] = FactoredRat(SparsePoly(1) - alpha_sum(g) + SparsePoly(qpow(1))) *
         FactoredRat::from_parts({}, SparsePoly(-1), {{{1, qpow(1)}, 1}});
  return pleth_exp(f);
}

BiSeries<FactoredRat> torsion_product_series(int g, int L, int M, const ZetaFn& zeta) {
  if (L < 1 || M < 1) throw Error(ErrorKind::InvalidArgument, "truncation orders must be positive");
  BiSeries<FactoredRat> prod(L);
  prod[0] = 1;
  for (int i = 1; i <= M; ++i) {
    auto coeffs = zeta(g, 1, qpow(-i) * Monomial::of(var::s)).expand_in(var::s, 0, L);
    prod = prod * BiSeries<FactoredRat>(std::move(coeffs));
  }
  return prod;
}

BiSeries<FactoredRat> torsion_heine_series(int g, int L) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
  BiSeries<FactoredRat> f(L);
  for (int l = 1; l <= L; ++l) {
    SparsePoly p = SparsePoly(1) + SparsePoly(qpow(l)) - alpha_sum(g).adams(l);
    // 1/(q^l - 1) = -1/(1 - q^l)
    f[l] = FactoredRat::from_parts({}, p.scaled(Rational(-1, l)), {{{1, qpow(l)}, 1}});
  }
  return series_exp(f);
}

namespace {

// ζ_X(x) from the integer numerator, exactly.
Rational curve_zeta_rational(const CurveData& c, const Rational& x) {
  Rational num = 0, xk = 1;
  for (const auto& a : c.numerator) {
    num += Rational(a) * xk;
    xk *= x;
  }
  return num / ((1 - x) * (1 - Rational(c.q) * x));
}

}  // namespace

std::vector<IdentityCheck> check_identities(int g, int L, const ZetaFn& zeta, bool throw_on_failure) {
  check_genus(g);
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
  std::vector<IdentityCheck> out;
  auto record = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
    if (!ok && throw_on_failure) throw Error(ErrorKind::IdentityViolation, out.back().name + ": " + out.back().detail);
  };

  {
    // ζ(s) = Exp((1 - Σα_i + q) s)
    BiSeries<FactoredRat> f(L);
    f[1] = FactoredRat(SparsePoly(1) - alpha_sum(g) + SparsePoly(qpow(1)));
    auto lhs = pleth_exp(f);
    BiSeries<FactoredRat> rhs(zeta(g, 1, Monomial::of(var::s)).expand_in(var::s, 0, L));
    int bad = -1;
    for (int k = 0; k <= L && bad < 0; ++k)
      if (!lhs[k].equals(rhs[k])) bad = k;
    record("zeta-exp g=" + std::to_string(g) + " L=" + std::to_string(L), bad < 0,
           bad < 0 ? "all coefficients agree" : "mismatch at s^" + std::to_string(bad));
  }
  {
    // Finite products against Exp(|X| (1 - q^{-M}) s / (q - 1)).
    int bad = -1, bad_m = 0;
    for (int M = 1; M <= L && bad < 0; ++M) {
      BiSeries<FactoredRat> f(L);
      f[1] = FactoredRat(SparsePoly(1) - alpha_sum(g) + SparsePoly(qpow(1))) *
             FactoredRat::binomial(1, qpow(-M)) * FactoredRat::from_parts({}, SparsePoly(-1), {{{1, qpow(1)}, 1}});
      auto lhs = pleth_exp(f);
      auto rhs = torsion_product_series(g, L, M, zeta);
      for (int k = 0; k <= L && bad < 0; ++k)
        if (!lhs[k].equals(rhs[k])) bad = k, bad_m = M;
    }
    record("zeta-product g=" + std::to_string(g) + " L=" + std::to_string(L), bad < 0,
           bad < 0 ? "M = 1.." + std::to_string(L) + " agree"
                   : "mismatch at s^" + std::to_string(bad) + " with M=" + std::to_string(bad_m));
  }
  {
    auto lhs = torsion_volume_series(g, L);
    auto rhs = torsion_heine_series(g, L);
    int bad = -1;
    for (int k = 0; k <= L && bad < 0; ++k)
      if (!lhs[k].equals(rhs[k])) bad = k;
    record("torsion-volume g=" + std::to_string(g) + " L=" + std::to_string(L), bad < 0,
           bad < 0 ? "all coefficients agree" : "mismatch at s^" + std::to_string(bad));
  }
  {
    auto curve = sample_curve(g);
    int worst_r = 0;
    double worst = 0;
    for (int r = 1; r <= std::min(L, 4); ++r) {
      // Symbolic ζ product at the curve's Weil numbers vs exact rationals.
      FactoredRat v = FactoredRat::monomial(1, qpow((g - 1) * (r * r - 1))) * FactoredRat(alpha_product(g)) *
                      FactoredRat::from_parts({}, SparsePoly(-1), {{{1, qpow(1)}, 1}});
      for (int k = 2; k <= r; ++k) v *= zeta(g, 1, qpow(-k));
      Rational exact = pow(Rational(curve.q), (g - 1) * (r * r - 1)) / (curve.q - 1);
      Rational pic = 0;
      for (const auto& a : curve.numerator) pic += a;
      exact *= pic;
      for (int k = 2; k <= r; ++k) exact *= curve_zeta_rational(curve, pow(Rational(curve.q), -k));
      double err = std::abs(v.evaluate(curve.assignment()) - exact.get_d()) / std::max(1.0, std::abs(exact.get_d()));
      if (err > worst) {
        worst = err;
        worst_r = r;
      }
    }
    record("siegel-volume g=" + std::to_string(g), worst < 1e-9,
           "max relative error " + std::to_string(worst) + (worst_r ? " at r=" + std::to_string(worst_r) : ""));
  }
  return out;
}

}  // namespace census
