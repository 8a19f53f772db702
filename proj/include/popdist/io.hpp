#pragma once

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "pop_solver.hpp"
#include "series.hpp"
#include "stats.hpp"

namespace popdist::io {

using json = nlohmann::ordered_json;

inline constexpr const char* schema = "popdist/1";

inline json to_json(const PopPattern& pat) {
  json rel = json::array();
  for (auto [a, b] : pat.relations()) rel.push_back({a, b});
  return {{"size", pat.size()}, {"relations", rel}};
}

inline PopPattern pop_from_json(const json& j) {
  std::vector<std::pair<int, int>> rel;
  for (const auto& r : j.at("relations")) rel.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
  return PopPattern(j.at("size").get<int>(), rel);
}

inline json to_json(const Term& t) {
  json exps = json::array();
  for (int e : t.mono.exponents()) exps.push_back(e);
  return {{"exps", exps}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}};
}

template <class Terms>
json terms_to_json(const Terms& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(to_json(t));
  return out;
}

inline json to_json(const Polynomial& p) { return terms_to_json(p.terms()); }

inline json to_json(const TruncSeries& s) { return {{"order", s.order()}, {"terms", terms_to_json(s.terms())}}; }

inline TruncSeries series_from_json(const json& j) {
  Polynomial sum;
  for (const auto& t : j.at("terms")) {
    Exponents e{};
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.at("exps").at(i).get<int>();
    mpq_class c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    sum += Polynomial(Monomial(e)) * Polynomial(c);
  }
  return sum.truncate(j.at("order").get<int>());
}

inline json to_json(const Permutation& p) {
  const auto s = stat_vector(p);
  return {{"perm", p.to_string()}, {"asc", s.asc},     {"des", s.des},   {"lrmax", s.lrmax},
          {"rlmax", s.rlmax},      {"lrmin", s.lrmin}, {"rlmin", s.rlmin}};
}

/// Coefficients of x^0..x^order of a series with no other variables.
inline std::vector<mpz_class> count_sequence(const TruncSeries& s) {
  std::vector<mpz_class> out;
  for (int n = 0; n <= s.order(); ++n) {
    const auto c = s.coeff(Monomial::of(Var::x, n));
    if (c.get_den() != 1) throw DomainError("non-integral count at x^" + std::to_string(n));
    out.push_back(c.get_num());
  }
  return out;
}

/// Counting text: comma-separated, from the lowest nonzero degree.
inline std::string counts_text(const TruncSeries& s) {
  const auto seq = count_sequence(s);
  std::size_t first = 0;
  while (first < seq.size() && seq[first] == 0) ++first;
  std::string out;
  for (std::size_t i = first; i < seq.size(); ++i) {
    if (i > first) out += ',';
    out += seq[i].get_str();
  }
  return out;
}

inline json counts_json(const TruncSeries& s) {
  const auto seq = count_sequence(s);
  json out = json::array();
  for (std::size_t n = 0; n < seq.size(); ++n) out.push_back({{"n", n}, {"count", seq[n].get_str()}});
  return out;
}

inline json header(const std::string& generator) { return {{"schema", schema}, {"generator", generator}}; }

inline json fk_json(int k, const TruncSeries& s, const std::string& generator, const std::string& mode) {
  auto j = header(generator);
  j["k"] = k;
  j["order"] = s.order();
  j["mode"] = mode;
  j["series"] = to_json(s);
  return j;
}

inline json to_json(const RationalGF& gf) {
  return {{"numerator", to_json(gf.numerator)},
          {"numerator_monomials", gf.numerator.size()},
          {"denominator", to_json(gf.denominator)},
          {"denominator_monomials", gf.denominator.size()}};
}

inline std::string ratfun_text(const RationalGF& gf) {
  std::ostringstream os;
  os << "numerator (" << gf.numerator.size() << " monomials): " << gf.numerator << '\n'
     << "denominator (" << gf.denominator.size() << " monomials): " << gf.denominator << '\n';
  return os.str();
}

inline json to_json(const DistributionTable& table) {
  auto j = header("oracle");
  j["n"] = table.n;
  j["pop"] = table.pop ? to_json(*table.pop) : json(nullptr);
  j["total"] = table.total();
  json rows = json::array();
  for (const auto& [e, c] : table.rows) rows.push_back({{"exps", e}, {"count", std::to_string(c)}});
  j["rows"] = rows;
  return j;
}

/// One row per exponent tuple in canonical order, count last.
inline std::string to_text(const DistributionTable& table) {
  std::ostringstream os;
  os << "asc des lrmax rlmax lrmin rlmin count\n";
  for (const auto& [e, c] : table.rows) {
    for (int v : e) os << v << ' ';
    os << c << '\n';
  }
  os << "total " << table.total() << '\n';
  return os.str();
}

}  // namespace popdist::io
