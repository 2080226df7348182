#include "census/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "census/error.hpp"
#include "census/result_io.hpp"
#include "census/ring_json.hpp"
#include "json_detail.hpp"

namespace census {

std::string engine_version() { return std::string(CENSUS_VERSION) + "+r" + std::to_string(kEngineRevision); }

int degree_class(long long d, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  long long m = d % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

int default_oracle_order(int g, int r) { return std::max(0, (g - 1) * r * (r - 1)) + 2 * r + 2; }

namespace {

void check_inputs(int g, int r) {
  if (g < 0 || g > kMaxGenus) throw Error(ErrorKind::InvalidArgument, "genus must lie in 0.." + std::to_string(kMaxGenus));
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  if (r > kMaxChain) throw Error(ErrorKind::InvalidArgument, "rank must be at most " + std::to_string(kMaxChain));
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Monomial zpow(int e) { return Monomial::of(var::z, e); }

// 1/(1 - q) as a FactoredRat.
FactoredRat q_minus_one() { return FactoredRat(SparsePoly(Monomial::of(var::q)) - SparsePoly(1)); }

}  // namespace

bool has_z_pole(const FactoredRat& f) {
  return std::any_of(f.denominator().begin(), f.denominator().end(),
                     [](const AtomPower& ap) { return ap.atom.shape.mentions(var::z); });
}

FactoredRat clear_roots_of_unity(const FactoredRat& f, int r) {
  FactoredRat Q = f * FactoredRat::binomial(1, zpow(r));
  if (has_z_pole(Q))
    throw Error(ErrorKind::NotPolynomialAfterClearing, "(1 - z^" + std::to_string(r) + ") A(z) keeps a z-pole: " + Q.to_string());
  return Q;
}

std::vector<FactoredRat> class_sums(const FactoredRat& Q, int r) {
  if (has_z_pole(Q)) throw Error(ErrorKind::NotPolynomialAfterClearing, "class sums need a z-polynomial");
  std::vector<FactoredRat> sums(static_cast<std::size_t>(r));
  if (Q.is_zero()) return sums;
  const int lo = Q.prefactor()[var::z] + Q.numerator().min_degree(var::z);
  const int hi = Q.prefactor()[var::z] + Q.numerator().max_degree(var::z);
  auto coeffs = Q.expand_in(var::z, lo, hi);
  for (int j = lo; j <= hi; ++j) {
    auto& c = coeffs[static_cast<std::size_t>(j - lo)];
    if (!c.is_zero()) sums[static_cast<std::size_t>(degree_class(j, r))] += c;
  }
  return sums;
}

Engine::Engine(EngineOptions options) : jobs_(options.jobs), cache_dir_(std::move(options.cache_dir)) {
  if (jobs_ <= 0) jobs_ = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("CENSUS_CACHE"); env && *env) cache_dir_ = env;
  if (!cache_dir_.empty()) std::filesystem::create_directories(cache_dir_);
}

template <class T, class F>
std::vector<T> Engine::parallel_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs_), count);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::optional<std::string> Engine::disk_read(const std::string& key) const {
  if (cache_dir_.empty()) return std::nullopt;
  std::ifstream in(std::filesystem::path(cache_dir_) / (key + ".json"));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto j = nlohmann::json::parse(buf.str());
    if (j.at("engine_version").get<std::string>() != engine_version()) return std::nullopt;
    return j.at("body").dump();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void Engine::disk_write(const std::string& key, const std::string& body) const {
  if (cache_dir_.empty()) return;
  nlohmann::json j = {{"engine_version", engine_version()}, {"body", nlohmann::json::parse(body)}};
  auto path = std::filesystem::path(cache_dir_) / (key + ".json");
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

const SymmetrizedKernel& Engine::kernel(int g, int n) {
  std::shared_ptr<SymmetrizedKernel> k;
  {
    std::lock_guard lock(mutex_);
    auto it = kernels_.find({g, n});
    if (it != kernels_.end()) return *it->second;
  }
  k = std::make_shared<SymmetrizedKernel>(build_kernel(g, n));
  std::lock_guard lock(mutex_);
  return *kernels_.try_emplace({g, n}, k).first->second;
}

FactoredRat Engine::h_factor(int g, const Partition& lambda) {
  if (lambda.empty()) return 1;
  {
    std::lock_guard lock(mutex_);
    auto it = h_cache_.find({g, lambda});
    if (it != h_cache_.end()) return it->second;
  }
  FactoredRat h = census::h_factor(g, lambda, &kernel(g, lambda.length()));
  std::lock_guard lock(mutex_);
  h_cache_.try_emplace({g, lambda}, h);
  return h;
}

FactoredRat Engine::rhs_term(int g, const Partition& lambda) {
  return FactoredRat::monomial(1, Monomial::of(var::q, (g - 1) * pairing(lambda, lambda))) * j_factor(g, lambda) *
         h_factor(g, lambda);
}

BiSeries<FactoredRat> Engine::rhs_series(int g, int R) {
  check_inputs(g, R);
  auto parts = partitions_up_to(R);
  // Kernels first, largest first, so the per-partition work below shares them.
  parallel_map<int>(static_cast<std::size_t>(R), [&](std::size_t i) {
    kernel(g, R - static_cast<int>(i));
    return 0;
  });
  auto terms = parallel_map<FactoredRat>(parts.size(), [&](std::size_t i) { return rhs_term(g, parts[i]); });
  BiSeries<FactoredRat> s(R);
  for (std::size_t i = 0; i < parts.size(); ++i) s[parts[i].size()] += terms[i];
  return s;
}

FactoredRat Engine::kac_rational(int g, int r) {
  check_inputs(g, r);
  {
    std::lock_guard lock(mutex_);
    auto it = rational_cache_.find({g, r});
    if (it != rational_cache_.end()) return it->second;
  }
  const std::string key = "rational_g" + std::to_string(g) + "_r" + std::to_string(r);
  FactoredRat value;
  if (auto hit = disk_read(key)) {
    value = factored_rat_from_json(*hit);
  } else {
    auto log = pleth_log(rhs_series(g, r));
    value = q_minus_one() * log[r];
    disk_write(key, to_json(value));
  }
  std::lock_guard lock(mutex_);
  rational_cache_.try_emplace({g, r}, value);
  return value;
}

KacResult Engine::kac_polynomial(int g, int r, long long d) {
  check_inputs(g, r);
  const int cls = degree_class(d, r);
  {
    std::lock_guard lock(mutex_);
    auto it = result_cache_.find({g, r, cls});
    if (it != result_cache_.end()) return it->second;
  }
  const std::string key = "kac_g" + std::to_string(g) + "_r" + std::to_string(r) + "_d" + std::to_string(cls);
  KacResult result;
  if (auto hit = disk_read(key)) {
    result = result_from_json(*hit);
  } else {
    auto start = Clock::now();
    auto sums = class_sums(clear_roots_of_unity(kac_rational(g, r), r), r);
    result.genus = g;
    result.rank = r;
    result.degree_class = cls;
    result.value = sums[static_cast<std::size_t>(cls)];
    result.is_polynomial = result.value.is_polynomial();
    result.is_d_independent = std::all_of(sums.begin(), sums.end(), [&](const FactoredRat& s) { return s.equals(sums[0]); });
    result.provenance = {"rational", r, 0, seconds_since(start)};
    disk_write(key, result_to_json(result));
  }
  std::lock_guard lock(mutex_);
  result_cache_.try_emplace({g, r, cls}, result);
  return result;
}

std::vector<FactoredRat> Engine::kac_series_oracle(int g, int r, int D) {
  check_inputs(g, r);
  if (D < 0) D = default_oracle_order(g, r);
  auto parts = partitions_up_to(r);
  auto terms = parallel_map<ZTruncated>(parts.size(), [&](std::size_t i) {
    return ZTruncated::expand(rhs_term(g, parts[i]), D);
  });
  BiSeries<ZTruncated> s(r);
  for (std::size_t i = 0; i < parts.size(); ++i) s[parts[i].size()] += terms[i];
  auto log = pleth_log(s);
  ZTruncated top = log[r] * ZTruncated(q_minus_one());
  std::vector<FactoredRat> out;
  for (int d = 0; d <= D; ++d) out.push_back(top[d]);
  return out;
}

Rational Engine::constant_term(int g, int r, long long d) {
  check_inputs(g, r);
  const int cls = degree_class(d, r);
  BiSeries<FactoredRat> s(r);
  for (const auto& lambda : partitions_up_to(r)) {
    auto profile = block_profile(lambda);
    // K_λ = 1/∏_i ∏_{j<=r_i} (1 - z^{-j})
    FactoredRat term = FactoredRat::monomial(1, zpow((g - 1) * pairing(lambda, lambda) - lambda.length()));
    for (int i = 1; i <= profile.blocks(); ++i)
      for (int j = 1; j <= profile.r(i); ++j) term *= FactoredRat::inverse_binomial(1, zpow(-j));
    s[lambda.size()] += term;
  }
  FactoredRat a0 = -pleth_log(s)[r];
  auto sums = class_sums(clear_roots_of_unity(a0, r), r);
  const auto& v = sums[static_cast<std::size_t>(cls)];
  if (!v.is_polynomial() || !v.to_poly().is_constant())
    throw Error(ErrorKind::NotPolynomialAfterClearing, "constant term is not a rational number: " + v.to_string());
  return v.to_poly().constant_term();
}

BettiResult Engine::betti_polynomial(int g, int r, long long d) {
  KacResult k = kac_polynomial(g, r, d);
  BettiResult out;
  out.coprime = std::gcd(static_cast<long long>(r), d) == 1;
  FactoredRat v = k.value;
  const Monomial t = Monomial::of(var::t);
  for (int i = 1; i <= 2 * g; i += 2) v = v.substitute(var::alpha(i), -1, t);
  v = v.substitute(var::q, 1, t.pow(2));
  v *= FactoredRat::monomial(1, t.pow(2 * (1 + (g - 1) * r * r)));
  if (!v.is_polynomial())
    throw Error(ErrorKind::NotPolynomialAfterClearing, "specialization keeps a denominator: " + v.to_string());
  out.polynomial = v.to_poly();
  if (out.coprime) {
    for (const auto& term : out.polynomial.terms()) {
      if (term.coeff < 0 || term.coeff.get_den() != 1 || term.mono[var::t] < 0)
        throw Error(ErrorKind::NegativeBettiCoefficient,
                    "coefficient " + term.coeff.get_str() + " at t^" + std::to_string(term.mono[var::t]));
    }
  }
  return out;
}

PointCount Engine::count_points(const CurveData& curve, int r, long long d) {
  if (curve.genus != static_cast<int>(curve.weil_numbers.size()) / 2)
    throw Error(ErrorKind::InvalidArgument, "curve data is inconsistent");
  KacResult k = kac_polynomial(curve.genus, r, d);
  std::complex<double> v = k.value.evaluate(curve.assignment());
  double rounded = std::round(v.real());
  PointCount out;
  out.residual = std::abs(v - std::complex<double>(rounded, 0));
  if (out.residual >= 1e-6 * std::max(1.0, std::abs(v)))
    throw Error(ErrorKind::RoundingFailure, "value " + std::to_string(v.real()) + " + " + std::to_string(v.imag()) +
                                                "i is not within tolerance of an integer");
  out.indecomposables = Integer(static_cast<long>(rounded));
  if (std::gcd(static_cast<long long>(r), d) == 1) {
    Rational h = pow(Rational(curve.q), 1 + (curve.genus - 1) * r * r) * Rational(out.indecomposables);
    if (h.get_den() == 1) out.higgs_points = h.get_num();
  }
  return out;
}

namespace {

// Remainder of Σ_d c_d x^d modulo the e-th cyclotomic polynomial.
bool vanishes_mod_cyclotomic(const std::vector<FactoredRat>& coeffs, int e) {
  // Φ_e by division of x^e - 1 by Φ_k for k | e, k < e.
  std::vector<std::vector<long>> phi(static_cast<std::size_t>(e) + 1);
  for (int k = 1; k <= e; ++k) {
    if (e % k) continue;
    std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    for (int j = 1; j < k; ++j) {
      if (k % j) continue;
      const auto& dv = phi[static_cast<std::size_t>(j)];
      std::vector<long> quot(p.size() - dv.size() + 1, 0);
      for (int i = static_cast<int>(p.size()) - 1; i >= static_cast<int>(dv.size()) - 1; --i) {
        long c = p[static_cast<std::size_t>(i)];
        const int shift = i - static_cast<int>(dv.size()) + 1;
        quot[static_cast<std::size_t>(shift)] = c;
        for (std::size_t t = 0; t < dv.size(); ++t) p[static_cast<std::size_t>(shift) + t] -= c * dv[t];
      }
      p = quot;
    }
    phi[static_cast<std::size_t>(k)] = p;
  }
  const auto& div = phi[static_cast<std::size_t>(e)];
  std::vector<FactoredRat> rem = coeffs;
  const int deg = static_cast<int>(div.size()) - 1;
  for (int i = static_cast<int>(rem.size()) - 1; i >= deg; --i) {
    FactoredRat c = rem[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    for (int t = 0; t <= deg; ++t)
      if (div[static_cast<std::size_t>(t)] != 0)
        rem[static_cast<std::size_t>(i - deg + t)] -= c.scaled(div[static_cast<std::size_t>(t)]);
  }
  for (int i = 0; i < std::min(deg, static_cast<int>(rem.size())); ++i)
    if (!rem[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

// Multiplicity of the denominator atoms that vanish at primitive e-th roots.
int atom_order(const FactoredRat& f, int e) {
  int order = 0;
  for (const auto& ap : f.denominator()) {
    const Monomial& s = ap.atom.shape;
    if (s.without(var::z) != Monomial{}) continue;
    const int k = s[var::z];
    if (ap.atom.constant == 1 && k % e == 0) order += ap.multiplicity;
    if (ap.atom.constant == -1 && (2 * k) % e == 0 && k % e != 0) order += ap.multiplicity;
  }
  return order;
}

}  // namespace

RegularityReport Engine::regularity_report(int g, int r) {
  check_inputs(g, r);
  RegularityReport rep;
  rep.genus = g;
  rep.rank = r;
  FactoredRat A = kac_rational(g, r);
  FactoredRat Q = A * FactoredRat::binomial(1, zpow(r));
  rep.clears_with_one_minus_z_r = !has_z_pole(Q);
  rep.clears_with_one_minus_z = !has_z_pole(A * FactoredRat::binomial(1, zpow(1)));
  if (rep.clears_with_one_minus_z_r) {
    rep.class_values = class_sums(Q, r);
    rep.d_independent = std::all_of(rep.class_values.begin(), rep.class_values.end(),
                                    [&](const FactoredRat& s) { return s.equals(rep.class_values[0]); });
  }
  for (int e = 1; e <= r; ++e) {
    if (r % e) continue;
    if (rep.clears_with_one_minus_z_r) {
      // A = P/(1 - z^r); at a primitive e-th root P equals Σ_d S_d ζ^d.
      rep.pole_orders.push_back({e, vanishes_mod_cyclotomic(rep.class_values, e) ? 0 : 1, true});
    } else {
      rep.pole_orders.push_back({e, atom_order(A, e), false});
    }
  }
  return rep;
}

}  // namespace census
