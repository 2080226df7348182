#include "census/result_io.hpp"

#include <vector>

#include "census/error.hpp"
#include "json_detail.hpp"

namespace census {

using nlohmann::json;

std::string result_to_json(const KacResult& r, int indent) {
  json j = {{"genus", r.genus}, {"rank", r.rank}, {"degree_class", r.degree_class}};
  if (r.is_polynomial) {
    j["polynomial_kind"] = "sparse_poly";
    j["polynomial"] = detail::poly_json(r.value.to_poly());
  } else {
    j["polynomial_kind"] = "factored_rat";
    j["polynomial"] = detail::rat_json(r.value);
  }
  j["flags"] = {{"is_polynomial", r.is_polynomial}, {"is_d_independent", r.is_d_independent}};
  j["provenance"] = {{"route", r.provenance.route},
                     {"t_order", r.provenance.t_order},
                     {"z_order", r.provenance.z_order},
                     {"wall_seconds", r.provenance.wall_seconds}};
  return j.dump(indent);
}

KacResult result_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    KacResult r;
    r.genus = j.at("genus").get<int>();
    r.rank = j.at("rank").get<int>();
    r.degree_class = j.at("degree_class").get<int>();
    const auto kind = j.at("polynomial_kind").get<std::string>();
    if (kind == "sparse_poly")
      r.value = FactoredRat(detail::poly_from(j.at("polynomial")));
    else if (kind == "factored_rat")
      r.value = detail::rat_from(j.at("polynomial"));
    else
      throw Error(ErrorKind::ParseError, "unknown polynomial_kind " + kind);
    r.is_polynomial = j.at("flags").at("is_polynomial").get<bool>();
    r.is_d_independent = j.at("flags").at("is_d_independent").get<bool>();
    const auto& p = j.at("provenance");
    r.provenance = {p.at("route").get<std::string>(), p.at("t_order").get<int>(), p.at("z_order").get<int>(),
                    p.at("wall_seconds").get<double>()};
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("result JSON: ") + e.what());
  }
}

namespace {

std::string latex_var(int v) {
  std::string name = var_name(v);
  if (name.starts_with("alpha_")) return "\\alpha_{" + name.substr(6) + "}";
  if (name.size() > 2 && name[1] == '_') return name.substr(0, 1) + "_{" + name.substr(2) + "}";
  return name;
}

// α_{2i-1}^{-k} is shown as α_{2i}^k q^{-k}.
std::vector<std::pair<int, int>> display_factors(const Monomial& m) {
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(kNumVars), {0, 0});
  for (int v = 0; v < kNumVars; ++v) out[static_cast<std::size_t>(v)] = {v, m[v]};
  for (int i = 1; i < 2 * kMaxGenus; i += 2) {
    int e = m[var::alpha(i)];
    if (e >= 0) continue;
    out[static_cast<std::size_t>(var::alpha(i))].second = 0;
    out[static_cast<std::size_t>(var::alpha(i + 1))].second = -e;
    out[static_cast<std::size_t>(var::q)].second += e;
  }
  return out;
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  for (auto [v, e] : display_factors(m)) {
    if (e == 0) continue;
    s += latex_var(v);
    if (e != 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

std::string text_monomial(const Monomial& m) {
  std::string s;
  for (auto [v, e] : display_factors(m)) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string latex_rational(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// "(1-\alpha_1)(1-\alpha_2)..." for sign '-' or '+', optional q.
std::string product_text(int genus, char sign, bool with_q) {
  std::string s;
  for (int i = 1; i <= 2 * genus; ++i)
    s += std::string("(1") + sign + (with_q ? "q" : "") + "\\alpha_" + (i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}") + ")";
  return s;
}

// Divides p by ∏(1 - c q^k α_i) when it divides exactly.
std::optional<SparsePoly> divide_product(const SparsePoly& p, int genus, const Rational& c, int k) {
  SparsePoly cur = p;
  for (int i = 1; i <= 2 * genus; ++i) {
    Monomial m = (i % 2 ? Monomial::of(var::alpha(i)) : Monomial::of(var::alpha(i - 1), -1) * Monomial::of(var::q)) *
                 Monomial::of(var::q, k);
    auto nf = normal_form(c, m);
    auto quot = cur.divide_by(nf.atom);
    if (!quot) return std::nullopt;
    cur = quot->times(nf.mono.inverse()).scaled(Rational(1) / nf.scale);
  }
  return cur;
}

}  // namespace

std::string to_text(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = text_monomial(it->mono);
    if (mono.empty())
      out += c.get_str();
    else
      out += (c == 1 ? "" : c.get_str() + "*") + mono;
  }
  return out;
}

std::string to_text(const FactoredRat& f) {
  if (f.is_polynomial()) return to_text(f.to_poly());
  std::string den;
  for (const auto& ap : f.denominator()) {
    den += ap.atom.to_string();
    if (ap.multiplicity > 1) den += "^" + std::to_string(ap.multiplicity);
  }
  return "(" + to_text(f.numerator().times(f.prefactor())) + ") / " + den;
}

std::string to_latex(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = latex_monomial(it->mono);
    if (mono.empty())
      out += latex_rational(c);
    else
      out += (c == 1 ? "" : latex_rational(c) + " ") + mono;
  }
  return out;
}

std::string to_latex(const FactoredRat& f, int genus) {
  if (f.is_zero()) return "0";
  if (!f.is_polynomial()) {
    std::string den;
    for (const auto& ap : f.denominator()) {
      den += "(1 - " + (ap.atom.constant == 1 ? "" : latex_rational(ap.atom.constant) + " ") +
             latex_monomial(ap.atom.shape) + ")";
      if (ap.multiplicity > 1) den += "^{" + std::to_string(ap.multiplicity) + "}";
    }
    return "\\frac{" + to_latex(f.numerator().times(f.prefactor())) + "}{" + den + "}";
  }
  SparsePoly rest = f.to_poly();
  std::string factors;
  if (genus > 0) {
    struct Shape {
      Rational c;
      int k;
      char sign;
      bool q;
    };
    for (const Shape& s : {Shape{1, 0, '-', false}, Shape{-1, 0, '+', false}, Shape{1, 1, '-', true}, Shape{-1, 1, '+', true}}) {
      while (auto quot = divide_product(rest, genus, s.c, s.k)) {
        factors += product_text(genus, s.sign, s.q);
        rest = *quot;
      }
    }
  }
  if (factors.empty()) return to_latex(rest);
  if (rest == SparsePoly(1)) return factors;
  if (rest == SparsePoly(-1)) return "-" + factors;
  return factors + "\\left(" + to_latex(rest) + "\\right)";
}

}  // namespace census
