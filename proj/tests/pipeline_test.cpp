#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "census/error.hpp"
#include "census/pipeline.hpp"
#include "census/result_io.hpp"
#include "helpers.hpp"
#include "r2_formula.hpp"

using namespace census;
using namespace census::test;

namespace {

// One engine per binary so the kernels and H factors are shared.
Engine& engine() {
  static Engine e;
  return e;
}

Integer binom(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

TEST(Pipeline, DegreeClass) {
  EXPECT_EQ(degree_class(-1, 3), 2);
  EXPECT_EQ(degree_class(5, 3), 2);
  EXPECT_EQ(degree_class(0, 1), 0);
  EXPECT_EQ(default_oracle_order(1, 2), 6);
  EXPECT_EQ(default_oracle_order(2, 3), 14);
}

TEST(Pipeline, RankZeroRejected) {
  try {
    engine().kac_polynomial(1, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Pipeline, RhsSeriesLowTerms) {
  for (int g = 0; g <= 2; ++g) {
    auto s = engine().rhs_series(g, 2);
    EXPECT_EQ(s[0], FactoredRat(1));
    auto t1 = FactoredRat::monomial(1, mono(var::q, g - 1)) * zeta_star(g, 1, 0) * over(1, mono(var::z));
    EXPECT_TRUE(s[1].equals(t1));
    auto t2 = FactoredRat::monomial(1, mono(var::q, 2 * (g - 1))) * j_factor(g, Partition({2})) *
                  h_factor(g, Partition({2})) +
              FactoredRat::monomial(1, mono(var::q, 4 * (g - 1))) * j_factor(g, Partition({1, 1})) *
                  h_factor(g, Partition({1, 1}));
    EXPECT_TRUE(s[2].equals(t2));
  }
}

TEST(Pipeline, RankOneRational) {
  for (int g = 0; g <= 3; ++g)
    EXPECT_EQ(engine().kac_rational(g, 1), FactoredRat(alpha_product(g)) * over(1, mono(var::z)));
}

TEST(Pipeline, RankOnePolynomial) {
  for (int g = 0; g <= 3; ++g)
    for (long long d : {0LL, -1LL, 5LL}) {
      auto r = engine().kac_polynomial(g, 1, d);
      EXPECT_TRUE(r.is_polynomial);
      EXPECT_EQ(r.polynomial(), alpha_product(g));
      EXPECT_EQ(r.degree_class, 0);
    }
}

TEST(Pipeline, RankTwoFormula) {
  for (int g = 0; g <= 2; ++g)
    for (long long d : {0LL, 1LL}) {
      auto r = engine().kac_polynomial(g, 2, d);
      EXPECT_EQ(r.value, rank_two_formula(g)) << "g=" << g << " d=" << d;
      EXPECT_TRUE(r.is_d_independent);
    }
  EXPECT_TRUE(engine().kac_polynomial(0, 2, 1).value.is_zero());
}

TEST(Pipeline, GenusZeroHasOnlyLineBundles) {
  EXPECT_TRUE(engine().kac_polynomial(0, 3, 1).value.is_zero());
}

TEST(Pipeline, DependsOnlyOnClass) {
  for (int g = 0; g <= 2; ++g)
    for (int r = 1; r <= 3; ++r)
      for (int d = 0; d < r; ++d)
        EXPECT_EQ(engine().kac_polynomial(g, r, d).value, engine().kac_polynomial(g, r, d + r).value);
}

TEST(Pipeline, SimplePolesAndRegularity) {
  for (int g = 0; g <= 2; ++g)
    for (int r = 2; r <= 3; ++r) {
      auto rep = engine().regularity_report(g, r);
      EXPECT_TRUE(rep.clears_with_one_minus_z_r);
      EXPECT_TRUE(rep.d_independent);
      for (const auto& p : rep.pole_orders)
        if (p.root_order > 1) EXPECT_EQ(p.order, 0) << "g=" << g << " r=" << r << " e=" << p.root_order;
    }
  auto r1 = engine().regularity_report(1, 1);
  EXPECT_TRUE(r1.d_independent);
  EXPECT_EQ(r1.class_values.size(), 1u);
}

TEST(Pipeline, ClearingRejectsDoublePole) {
  auto f = over(1, mono(var::z), 2);
  try {
    clear_roots_of_unity(f, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPolynomialAfterClearing);
  }
}

TEST(Pipeline, ClassSumsOfModelCase) {
  // 1/(1-z) has residue -1 at z = 1 and A = 1 on the one class.
  auto sums = class_sums(clear_roots_of_unity(over(1, mono(var::z)), 1), 1);
  ASSERT_EQ(sums.size(), 1u);
  EXPECT_EQ(sums[0], FactoredRat(1));
  // z/(1-z^2): classes 0 -> 0 and 1 -> 1
  auto two = class_sums(clear_roots_of_unity(F(var::z) * over(1, mono(var::z, 2)), 2), 2);
  EXPECT_TRUE(two[0].is_zero());
  EXPECT_EQ(two[1], FactoredRat(1));
}

TEST(Pipeline, ConstantTermTable) {
  for (int g = 0; g <= 5; ++g) {
    std::vector<Integer> expect = {1, binom(g, 1), 4 * binom(g, 2) + binom(g, 1),
                                   32 * binom(g, 3) + 20 * binom(g, 2) + binom(g, 1)};
    for (int r = 1; r <= 4; ++r)
      for (long long d : {0LL, 1LL})
        EXPECT_EQ(engine().constant_term(g, r, d), Rational(expect[r - 1])) << "g=" << g << " r=" << r;
  }
  EXPECT_EQ(engine().constant_term(3, 3, 1), 15);
  EXPECT_EQ(engine().constant_term(3, 4, 1), 95);
}

TEST(Pipeline, SeriesOracleRankOne) {
  auto c0 = engine().kac_series_oracle(0, 1, 6);
  for (const auto& c : c0) EXPECT_EQ(c, FactoredRat(1));
  auto c2 = engine().kac_series_oracle(2, 1, 5);
  for (const auto& c : c2) EXPECT_EQ(c, FactoredRat(alpha_product(2)));
}

TEST(Pipeline, SeriesOracleTailMatches) {
  for (int g = 0; g <= 2; ++g)
    for (int r = 1; r <= 3; ++r) {
      auto coeffs = engine().kac_series_oracle(g, r);
      const int start = std::max(0, (g - 1) * r * (r - 1)) + 1;
      ASSERT_GE(static_cast<int>(coeffs.size()), start + r);
      for (int d = start; d < static_cast<int>(coeffs.size()); ++d)
        EXPECT_TRUE(coeffs[d].equals(engine().kac_polynomial(g, r, d).value)) << g << "," << r << "," << d;
    }
}

TEST(Pipeline, BettiExamples) {
  auto t = P(var::t);
  auto b = engine().betti_polynomial(1, 1, 0);
  EXPECT_EQ(b.polynomial, P(var::t, 2) * (SparsePoly(1) + t).pow(2));
  EXPECT_EQ(engine().betti_polynomial(0, 1, 0).polynomial, SparsePoly(1));
  EXPECT_FALSE(engine().betti_polynomial(1, 2, 0).coprime);
}

TEST(Pipeline, BettiUnitaryAndPositive) {
  for (int g = 1; g <= 2; ++g)
    for (auto [r, d] : {std::pair{1, 0}, {2, 1}, {3, 1}, {3, 2}}) {
      auto b = engine().betti_polynomial(g, r, d);
      const int top = 4 * (1 + (g - 1) * r * r);
      EXPECT_EQ(b.polynomial.max_degree(var::t), top);
      Rational lead;
      for (const auto& term : b.polynomial.terms()) {
        EXPECT_GE(term.coeff, 0);
        EXPECT_EQ(term.coeff.get_den(), 1);
        if (term.mono[var::t] == top) lead = term.coeff;
      }
      EXPECT_EQ(lead, 1);
      // lowest coefficient sits at t^{2(1+(g-1)r²)} and equals the constant term
      const int low = 2 * (1 + (g - 1) * r * r);
      EXPECT_EQ(b.polynomial.min_degree(var::t), low);
      Rational at_low;
      for (const auto& term : b.polynomial.terms())
        if (term.mono[var::t] == low) at_low = term.coeff;
      EXPECT_EQ(at_low, engine().constant_term(g, r, d));
    }
}

TEST(Pipeline, EllipticCounts) {
  for (auto [q, n1] : {std::pair{2, 3}, {3, 4}, {5, 8}}) {
    auto curve = weil_from_counts(q, {static_cast<long long>(n1)});
    for (auto [r, d] : {std::pair{1, 0}, {2, 1}, {3, 1}, {3, 2}}) {
      auto pc = engine().count_points(curve, r, d);
      EXPECT_EQ(pc.indecomposables, n1);
      EXPECT_LT(pc.residual, 1e-6);
      ASSERT_TRUE(pc.higgs_points.has_value());
      EXPECT_EQ(*pc.higgs_points, Integer(q) * n1);
    }
    EXPECT_FALSE(engine().count_points(curve, 2, 0).higgs_points.has_value());
  }
  auto spot = engine().count_points(weil_from_counts(2, {3}), 1, 0);
  EXPECT_EQ(*spot.higgs_points, 6);
}

TEST(Pipeline, KacPolynomialSymmetric) {
  // Pair swaps and in-pair swaps; other permutations leave the pairing.
  auto v = engine().kac_polynomial(2, 2, 1).value;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> re(0.5, 1.5);
  for (int i = 0; i < 10; ++i) {
    double qv = 2 + re(rng);
    std::complex<double> a{re(rng), re(rng)}, b{re(rng), -re(rng)};
    auto at = [&](std::complex<double> x, std::complex<double> y) {
      return v.evaluate({{var::alpha(1), x}, {var::alpha(3), y}, {var::q, qv}});
    };
    auto base = at(a, b);
    EXPECT_LT(rel_err(at(b, a), base), 1e-9);
    EXPECT_LT(rel_err(at(qv / a, b), base), 1e-9);
  }
}

TEST(Pipeline, ResultJsonRoundTrip) {
  for (auto [g, r] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    auto res = engine().kac_polynomial(g, r, 1);
    auto text = result_to_json(res);
    auto back = result_from_json(text);
    EXPECT_EQ(back.value, res.value);
    EXPECT_EQ(back.degree_class, res.degree_class);
    EXPECT_EQ(back.is_d_independent, res.is_d_independent);
    EXPECT_EQ(result_to_json(back), text);
  }
}

TEST(Pipeline, DiskCacheIsExactAndVersioned) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("census_cache_test_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::string cold;
  {
    Engine e({1, dir.string()});
    cold = result_to_json(e.kac_polynomial(1, 2, 1));
  }
  ASSERT_TRUE(fs::exists(dir / "kac_g1_r2_d1.json"));
  {
    Engine e({1, dir.string()});
    EXPECT_EQ(result_to_json(e.kac_polynomial(1, 2, 1)), cold);
  }
  // A stale stamp with a bogus body must be ignored.
  {
    std::ofstream out(dir / "kac_g1_r2_d1.json");
    out << R"({"engine_version":"0.0.0+r0","body":{"genus":9}})";
  }
  {
    Engine e({1, dir.string()});
    auto res = e.kac_polynomial(1, 2, 1);
    EXPECT_EQ(res.value, rank_two_formula(1));
  }
  fs::remove_all(dir);
}

TEST(ResultIo, LatexFactorsProducts) {
  EXPECT_EQ(to_latex(FactoredRat(alpha_product(1)), 1), "(1-\\alpha_1)(1-\\alpha_2)");
  EXPECT_EQ(to_latex(FactoredRat(1), 0), "1");
  EXPECT_EQ(to_latex(FactoredRat(), 2), "0");
}

}  // namespace
