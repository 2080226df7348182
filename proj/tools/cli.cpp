#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <numeric>

#include "census/error.hpp"
#include "census/pipeline.hpp"
#include "census/result_io.hpp"

namespace census::cli {

namespace {

struct Invocation {
  int genus = -1;
  int rank = 0;
  long long degree = 0;
  std::string curve;
  std::string format = "text";
  std::string cache_dir;
  int jobs = 0;
  int order = 6;
  int verbosity = 0;
};

void require_range(const char* name, long long value, long long lo, long long hi) {
  if (value < lo || value > hi)
    throw Error(ErrorKind::UsageError, std::string("--") + name + " must lie in " + std::to_string(lo) + ".." +
                                           std::to_string(hi));
}

std::string class_line(int cls, int r) {
  return "degree class " + std::to_string(cls) + " (mod " + std::to_string(r) + ")";
}

void run_kac(Engine& engine, const Invocation& in, std::ostream& out, std::ostream& err) {
  KacResult k = engine.kac_polynomial(in.genus, in.rank, in.degree);
  if (in.verbosity > 0)
    err << "route " << k.provenance.route << ", T-order " << k.provenance.t_order << ", "
        << k.provenance.wall_seconds << " s\n";
  if (in.format == "json") {
    out << result_to_json(k, 2) << '\n';
  } else if (in.format == "latex") {
    out << to_latex(k.value, in.genus) << '\n';
  } else {
    out << class_line(k.degree_class, k.rank) << '\n'
        << "A = " << to_text(k.value) << '\n'
        << "polynomial " << (k.is_polynomial ? "yes" : "no") << ", d-independent "
        << (k.is_d_independent ? "yes" : "no") << '\n';
  }
}

void run_constant_term(Engine& engine, const Invocation& in, std::ostream& out) {
  Rational c = engine.constant_term(in.genus, in.rank, in.degree);
  if (in.format == "json") {
    nlohmann::json j = {{"genus", in.genus},
                        {"rank", in.rank},
                        {"degree_class", degree_class(in.degree, in.rank)},
                        {"constant_term", c.get_str()}};
    out << j.dump(2) << '\n';
  } else {
    out << c.get_str() << '\n';
  }
}

void run_betti(Engine& engine, const Invocation& in, std::ostream& out, std::ostream& err) {
  BettiResult b = engine.betti_polynomial(in.genus, in.rank, in.degree);
  if (!b.coprime) err << "warning: gcd(rank, degree) != 1, positivity is not asserted\n";
  const int cls = degree_class(in.degree, in.rank);
  if (in.format == "json") {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& t : b.polynomial.terms()) coeffs[std::to_string(t.mono[var::t])] = t.coeff.get_str();
    nlohmann::json j = {{"genus", in.genus}, {"rank", in.rank}, {"degree_class", cls},
                        {"coprime", b.coprime}, {"coefficients", coeffs}};
    out << j.dump(2) << '\n';
  } else if (in.format == "latex") {
    out << to_latex(b.polynomial) << '\n';
  } else {
    out << class_line(cls, in.rank) << '\n' << "P(t) = " << to_text(b.polynomial) << '\n';
  }
}

void run_count(Engine& engine, const Invocation& in, std::ostream& out) {
  CurveData curve = curve_from_file(in.curve);
  PointCount p = engine.count_points(curve, in.rank, in.degree);
  const int cls = degree_class(in.degree, in.rank);
  if (in.format == "json") {
    nlohmann::json j = {{"genus", curve.genus}, {"rank", in.rank}, {"degree_class", cls}, {"q", curve.q},
                        {"indecomposables", p.indecomposables.get_str()}};
    j["higgs_points"] = p.higgs_points ? nlohmann::json(p.higgs_points->get_str()) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << class_line(cls, in.rank) << '\n' << "indecomposables " << p.indecomposables.get_str() << '\n';
    if (p.higgs_points) out << "higgs_points " << p.higgs_points->get_str() << '\n';
  }
}

void run_check(Engine& engine, const Invocation& in, std::ostream& out) {
  RegularityReport rep = engine.regularity_report(in.genus, in.rank);
  bool oracle_ok = false;
  int D = default_oracle_order(in.genus, in.rank);
  if (rep.clears_with_one_minus_z_r) {
    auto series = engine.kac_series_oracle(in.genus, in.rank, D);
    const int bound = std::max(0, (in.genus - 1) * in.rank * (in.rank - 1));
    oracle_ok = true;
    for (int d = bound + 1; d <= D; ++d)
      oracle_ok = oracle_ok && series[static_cast<std::size_t>(d)].equals(
                                   rep.class_values[static_cast<std::size_t>(degree_class(d, in.rank))]);
  }
  auto mark = [](bool b) { return b ? "pass" : "fail"; };
  if (in.format == "json") {
    nlohmann::json poles = nlohmann::json::array();
    for (const auto& p : rep.pole_orders) poles.push_back({{"root_order", p.root_order}, {"order", p.order}, {"exact", p.exact}});
    nlohmann::json j = {{"genus", in.genus},
                        {"rank", in.rank},
                        {"pole_orders", poles},
                        {"clears_with_one_minus_z_r", rep.clears_with_one_minus_z_r},
                        {"clears_with_one_minus_z", rep.clears_with_one_minus_z},
                        {"d_independent", rep.d_independent},
                        {"oracle_z_order", D},
                        {"oracle_agrees", oracle_ok}};
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : rep.pole_orders)
      out << "pole order at primitive " << p.root_order << "-th roots of unity: " << p.order
          << (p.exact ? "" : " (upper bound)") << '\n';
    out << mark(rep.clears_with_one_minus_z_r) << " (1 - z^r) A(z) is a polynomial in z\n"
        << mark(rep.clears_with_one_minus_z) << " (1 - z) A(z) is a polynomial in z\n"
        << mark(rep.d_independent) << " all degree classes agree\n"
        << mark(oracle_ok) << " series oracle tail to z^" << D << " matches every class\n";
  }
  if (!rep.clears_with_one_minus_z_r)
    throw Error(ErrorKind::NotPolynomialAfterClearing, "(1 - z^r) A(z) keeps a z-pole");
  if (!oracle_ok) throw Error(ErrorKind::IdentityViolation, "series oracle disagrees with the rational route");
}

void run_identities(const Invocation& in, std::ostream& out) {
  auto checks = check_identities(in.genus, in.order);
  bool ok = true;
  if (in.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << j.dump(2) << '\n';
  }
  for (const auto& c : checks) {
    if (in.format != "json") out << (c.passed ? "pass " : "fail ") << c.name << ": " << c.detail << '\n';
    ok = ok && c.passed;
  }
  if (!ok) throw Error(ErrorKind::IdentityViolation, "an identity failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts of indecomposable vector bundles on curves over finite fields", "census"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", engine_version());

  Invocation in;
  app.add_option("--cache-dir", in.cache_dir, "Result cache directory (CENSUS_CACHE overrides)");
  app.add_option("--jobs", in.jobs, "Worker threads (default: logical processors)")->check(CLI::NonNegativeNumber);
  app.add_flag("-v,--verbose", in.verbosity, "Report timing on stderr");
  app.add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  auto* kac = app.add_subcommand("kac", "The polynomial A_{g,r,d}");
  auto* ct = app.add_subcommand("constant-term", "The constant term A_{g,r,d}(0)");
  auto* betti = app.add_subcommand("betti", "Compactly supported Poincare polynomial of the Higgs moduli space");
  auto* count = app.add_subcommand("count", "Indecomposable and Higgs counts for a curve file");
  auto* check = app.add_subcommand("check", "Regularity and two-route consistency report");
  auto* ids = app.add_subcommand("identities", "Zeta and volume identities");

  for (auto* sub : {kac, ct, betti, check, ids})
    sub->add_option("--genus,-g", in.genus, "Genus")->required();
  for (auto* sub : {kac, ct, betti, count, check}) sub->add_option("--rank,-r", in.rank, "Rank")->required();
  for (auto* sub : {kac, ct, betti, count}) sub->add_option("--degree,-d", in.degree, "Degree (any integer)")->required();
  count->add_option("--curve", in.curve, "Curve JSON {q, genus, point_counts}")->required();
  ids->add_option("--order,-L", in.order, "Truncation order in s");
  for (auto* sub : {kac, ct, betti, count, check, ids}) {
    sub->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--cache-dir", in.cache_dir, "Result cache directory");
    sub->add_option("--jobs", in.jobs, "Worker threads")->check(CLI::NonNegativeNumber);
    sub->add_flag("-v,--verbose", in.verbosity, "Report timing on stderr");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    auto* sub = app.get_subcommands().front();
    if (sub != count) require_range("genus", in.genus, 0, kMaxGenus);
    if (sub != ids) require_range("rank", in.rank, 1, kMaxChain);
    if (sub == ids) require_range("order", in.order, 1, 12);

    if (sub == ids) {
      run_identities(in, out);
      return kOk;
    }
    Engine engine({in.jobs, in.cache_dir});
    if (sub == kac)
      run_kac(engine, in, out, err);
    else if (sub == ct)
      run_constant_term(engine, in, out);
    else if (sub == betti)
      run_betti(engine, in, out, err);
    else if (sub == count)
      run_count(engine, in, out);
    else if (sub == check)
      run_check(engine, in, out);
    return kOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::UsageError ? kUsageError : kDomainError;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace census::cli
