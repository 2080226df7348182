#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "census/curve_zeta.hpp"
#include "census/factored_rat.hpp"
#include "census/partition.hpp"
#include "census/residue.hpp"
#include "census/series.hpp"
#include "census/ztruncated.hpp"

namespace census {

/// Bumped whenever a change alters cached values.
inline constexpr int kEngineRevision = 1;
std::string engine_version();

struct Provenance {
  std::string route;      // "rational" or "series-oracle"
  int t_order = 0;
  int z_order = 0;        // 0 in the rational route
  double wall_seconds = 0;
};

struct KacResult {
  int genus = 0;
  int rank = 0;
  int degree_class = 0;
  FactoredRat value;
  bool is_polynomial = false;
  bool is_d_independent = false;
  Provenance provenance;

  /// The value as a Laurent polynomial; throws if it has a denominator.
  SparsePoly polynomial() const { return value.to_poly(); }
};

struct PoleOrder {
  int root_order;  // e: primitive e-th roots of unity, e | r
  int order;
  bool exact;      // false: denominator multiplicity, an upper bound
};

struct RegularityReport {
  int genus = 0;
  int rank = 0;
  std::vector<PoleOrder> pole_orders;
  bool clears_with_one_minus_z = false;    // (1 - z) A_{g,r}(z) has no z-poles
  bool clears_with_one_minus_z_r = false;  // (1 - z^r) A_{g,r}(z) has no z-poles
  bool d_independent = false;
  std::vector<FactoredRat> class_values;   // A_{g,r,d} for d = 0..r-1
};

struct BettiResult {
  SparsePoly polynomial;  // in t
  bool coprime = true;    // false: positivity is not guaranteed and not asserted
};

struct PointCount {
  Integer indecomposables;
  std::optional<Integer> higgs_points;  // only when gcd(r, d) = 1
  double residual = 0;
};

struct EngineOptions {
  int jobs = 0;            // 0: hardware concurrency
  std::string cache_dir;   // empty: memory cache only; CENSUS_CACHE overrides
};

/// Reduces d into 0..r-1.
int degree_class(long long d, int r);

/// Default z-order of the series oracle, one full period past the
/// stabilization bound.
int default_oracle_order(int g, int r);

class Engine {
 public:
  explicit Engine(EngineOptions options = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const std::string& cache_dir() const { return cache_dir_; }
  int jobs() const { return jobs_; }

  const SymmetrizedKernel& kernel(int g, int n);
  FactoredRat h_factor(int g, const Partition& lambda);
  /// q^{(g-1)<λ,λ>} J_λ(z) H_λ(z), the T^{|λ|} weight of λ.
  FactoredRat rhs_term(int g, const Partition& lambda);

  BiSeries<FactoredRat> rhs_series(int g, int R);
  FactoredRat kac_rational(int g, int r);
  KacResult kac_polynomial(int g, int r, long long d);
  /// A^{>=0}_{g,r,d} for d = 0..D from the z-truncated route.
  std::vector<FactoredRat> kac_series_oracle(int g, int r, int D = -1);
  Rational constant_term(int g, int r, long long d);
  BettiResult betti_polynomial(int g, int r, long long d);
  PointCount count_points(const CurveData& curve, int r, long long d);
  RegularityReport regularity_report(int g, int r);

 private:
  template <class T, class F>
  std::vector<T> parallel_map(std::size_t count, F&& f);

  std::optional<std::string> disk_read(const std::string& key) const;
  void disk_write(const std::string& key, const std::string& body) const;

  int jobs_;
  std::string cache_dir_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<SymmetrizedKernel>> kernels_;
  std::map<std::pair<int, Partition>, FactoredRat> h_cache_;
  std::map<std::pair<int, int>, FactoredRat> rational_cache_;
  std::map<std::tuple<int, int, int>, KacResult> result_cache_;
};

/// Σ_{j ≡ d mod r} [z^j] Q(z) for every class d, Q free of z-denominators.
std::vector<FactoredRat> class_sums(const FactoredRat& Q, int r);
/// Throws NotPolynomialAfterClearing when (1 - z^r) f keeps a z-pole.
FactoredRat clear_roots_of_unity(const FactoredRat& f, int r);
bool has_z_pole(const FactoredRat& f);

}  // namespace census
