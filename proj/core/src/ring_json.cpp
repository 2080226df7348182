#include "census/ring_json.hpp"

#include <algorithm>
#include <vector>

#include "census/error.hpp"
#include "json_detail.hpp"

namespace census {

namespace detail {
namespace {

using nlohmann::json;

struct VarSet {
  std::vector<int> vars;

  void add(const Monomial& m) {
    for (int v = 0; v < kNumVars; ++v)
      if (m.mentions(v) && std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  void add(const SparsePoly& p) {
    for (const auto& t : p.terms()) add(t.mono);
  }
  void finish() { std::sort(vars.begin(), vars.end()); }

  json names() const {
    json out = json::array();
    for (int v : vars) out.push_back(var_name(v));
    return out;
  }
  json exps(const Monomial& m) const {
    json out = json::array();
    for (int v : vars) out.push_back(m[v]);
    return out;
  }
  json terms(const SparsePoly& p) const {
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back(json::array({exps(t.mono), to_fraction_string(t.coeff)}));
    return out;
  }
};

std::vector<int> read_vars(const json& j) {
  std::vector<int> vars;
  for (const auto& name : j.at("variables")) {
    auto v = parse_var_name(name.get<std::string>());
    if (!v) throw Error(ErrorKind::ParseError, "unknown variable " + name.dump());
    vars.push_back(*v);
  }
  return vars;
}

Monomial read_mono(const std::vector<int>& vars, const json& e) {
  if (!e.is_array() || e.size() != vars.size())
    throw Error(ErrorKind::ParseError, "exponent vector length mismatch");
  Monomial m;
  for (std::size_t i = 0; i < vars.size(); ++i) m.set(vars[i], e[i].get<int>());
  return m;
}

SparsePoly read_terms(const std::vector<int>& vars, const json& j) {
  std::vector<SparsePoly::Term> terms;
  for (const auto& t : j) terms.push_back({read_mono(vars, t.at(0)), parse_fraction(t.at(1).get<std::string>())});
  return SparsePoly::from_terms(std::move(terms));
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

json poly_json(const SparsePoly& p) {
  VarSet vs;
  vs.add(p);
  vs.finish();
  return {{"variables", vs.names()}, {"terms", vs.terms(p)}};
}

json rat_json(const FactoredRat& f) {
  VarSet vs;
  vs.add(f.prefactor());
  vs.add(f.numerator());
  for (const auto& ap : f.denominator()) vs.add(ap.atom.shape);
  vs.finish();
  json den = json::array();
  for (const auto& ap : f.denominator())
    for (int k = 0; k < ap.multiplicity; ++k)
      den.push_back(json::array({to_fraction_string(ap.atom.constant), vs.exps(ap.atom.shape)}));
  return {{"variables", vs.names()},
          {"prefactor", vs.exps(f.prefactor())},
          {"numerator", vs.terms(f.numerator())},
          {"denominator", den}};
}

SparsePoly poly_from(const json& j) {
  return guarded([&] { return read_terms(read_vars(j), j.at("terms")); });
}

FactoredRat rat_from(const json& j) {
  return guarded([&] {
    auto vars = read_vars(j);
    std::vector<AtomPower> den;
    for (const auto& a : j.at("denominator"))
      den.push_back({{parse_fraction(a.at(0).get<std::string>()), read_mono(vars, a.at(1))}, 1});
    return FactoredRat::from_parts(read_mono(vars, j.at("prefactor")), read_terms(vars, j.at("numerator")),
                                   std::move(den));
  });
}

}  // namespace detail

namespace {
nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}
}  // namespace

std::string to_json(const SparsePoly& p) { return detail::poly_json(p).dump(); }
std::string to_json(const FactoredRat& f) { return detail::rat_json(f).dump(); }
SparsePoly sparse_poly_from_json(std::string_view text) { return detail::poly_from(parse(text)); }
FactoredRat factored_rat_from_json(std::string_view text) { return detail::rat_from(parse(text)); }

}  // namespace census
