#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "closed_forms.hpp"
#include "oracle.hpp"
#include "pop_solver.hpp"
#include "separable.hpp"
#include "stats.hpp"

namespace popdist::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 8;
  Limits limits = Limits::from_env();
};

inline constexpr std::array<std::string_view, 6> suite_names{"closed-vs-oracle", "thm4-vs-oracle", "thm4-vs-closed",
                                                             "symmetry",         "structure",      "all"};

inline bool is_suite(std::string_view name) {
  return std::find(suite_names.begin(), suite_names.end(), name) != suite_names.end();
}

inline Check compare(std::string name, const TruncSeries& lhs, const TruncSeries& rhs) {
  Check c{std::move(name), true, {}};
  if (lhs.order() != rhs.order()) {
    c.passed = false;
    c.detail = "orders differ: " + std::to_string(lhs.order()) + " vs " + std::to_string(rhs.order());
  } else if (auto d = first_difference(lhs, rhs)) {
    c.passed = false;
    c.detail = "first difference at " + to_string(d->mono) + ": " + d->lhs.get_str() + " vs " + d->rhs.get_str();
  }
  return c;
}

inline Check expect(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string{} : std::move(detail)};
}

inline const std::initializer_list<Var> all_stats{Var::p, Var::q, Var::u, Var::v, Var::s, Var::t};

/// Keeps only the named variable among p, q, u, v, s, t.
inline TruncSeries keep_only(const TruncSeries& s, Var keep) {
  TruncSeries out = s;
  for (Var v : all_stats)
    if (v != keep) out = out.specialize({v});
  return out;
}

inline std::vector<Check> closed_vs_oracle(const VerifyOptions& opt) {
  const int N = opt.max_n;
  std::vector<Check> out;
  const auto sep = oracle_series(std::nullopt, N, opt.limits);
  std::optional<TruncSeries> o3, o4;
  for (int k = 2; k <= 4; ++k) {
    const auto o = oracle_series(k, N, opt.limits);
    const auto id = k == 2 ? ClosedFormId::F2 : k == 3 ? ClosedFormId::F3 : ClosedFormId::F4;
    out.push_back(compare(std::string(name_of(id)) + " vs oracle", closed_form(id).expand(N), o));
    (k == 3 ? o3 : o4) = o;
  }
  out.push_back(compare("F3_counting vs oracle", closed_form(ClosedFormId::F3_counting).expand(N), o3->specialize(all_stats)));
  out.push_back(compare("F4_counting vs oracle", closed_form(ClosedFormId::F4_counting).expand(N), o4->specialize(all_stats)));
  out.push_back(compare("F3_xv vs oracle", closed_form(ClosedFormId::F3_xv).expand(N), keep_only(*o3, Var::v)));
  out.push_back(compare("F3_xu vs oracle", closed_form(ClosedFormId::F3_xu).expand(N), keep_only(*o3, Var::u)));
  out.push_back(compare("F3_xt vs oracle", closed_form(ClosedFormId::F3_xt).expand(N), keep_only(*o3, Var::t)));
  out.push_back(compare("F4_xu vs oracle", closed_form(ClosedFormId::F4_xu).expand(N), keep_only(*o4, Var::u)));
  out.push_back(compare("F4_xt vs oracle", closed_form(ClosedFormId::F4_xt).expand(N), keep_only(*o4, Var::t)));
  if (N >= 1) {
    const auto lmax = lmax_separable_series(N);
    out.push_back(compare("Lmax_separable vs oracle", lmax, keep_only(sep, Var::u) - TruncSeries::one(N)));
    out.push_back(expect("Lmax_separable integral", lmax.has_nonnegative_integer_coefficients()));
    const auto S = s_tpq_series(N);
    out.push_back(expect("S_tpq cubic residual", s_tpq_residual(S).is_zero(), s_tpq_residual(S).to_string()));
    out.push_back(compare("S_tpq vs oracle asc/des", S, sep.specialize({Var::u, Var::v, Var::s, Var::t}) - TruncSeries::one(N)));
  }
  return out;
}

inline std::vector<Check> thm4_vs_oracle(const VerifyOptions& opt) {
  const int N = opt.max_n;
  std::vector<Check> out;
  const auto table = xn_table(std::min(N, 4), opt.limits);
  for (int k = 2; k <= 6; ++k) {
    const auto o = oracle_series(k, N, opt.limits);
    const auto r = solve_fk(k, N, table, {true, opt.limits});
    const auto tag = "k=" + std::to_string(k);
    out.push_back(compare("solve_fk " + tag + " vs oracle", r.full, o));
    out.push_back(compare("solve_fk " + tag + " u=1 stage", r.full.specialize({Var::u}), r.u1));
    TruncSeries sum = TruncSeries::one(N);
    for (std::size_t i = 0; i < r.f.size(); ++i) sum += r.f[i] + r.g[i];
    out.push_back(compare("solve_fk " + tag + " f/g sum", sum, r.full));
    out.push_back(compare("solve_fk_uv " + tag + " vs oracle", solve_fk_uv(k, N, table), o.specialize({Var::p, Var::q, Var::s, Var::t})));
    out.push_back(compare("solve_fk_counting " + tag + " vs oracle", solve_fk_counting(k, N), o.specialize(all_stats)));
  }
  return out;
}

inline std::vector<Check> thm4_vs_closed(const VerifyOptions& opt) {
  using namespace vars;
  const int N = opt.max_n;
  std::vector<Check> out;
  const auto table = xn_table(std::min(N, 4), opt.limits);
  for (int k = 2; k <= 4; ++k) {
    const auto id = k == 2 ? ClosedFormId::F2 : k == 3 ? ClosedFormId::F3 : ClosedFormId::F4;
    out.push_back(compare("solve_fk k=" + std::to_string(k) + " vs " + std::string(name_of(id)),
                          solve_fk(k, N, table, {false, opt.limits}).full, closed_form(id).expand(N)));
  }
  out.push_back(compare("solve_fk_uv k=2 vs closed", solve_fk_uv(2, N, table),
                        RationalGF{1 - v() * x() + u() * v() * x(), 1 - v() * x()}.expand(N)));
  const Polynomial den3 = 1 - 2 * v() * x() - v() * x().pow(2) + v().pow(2) * x().pow(2);
  const Polynomial num3 = den3 + u() * v() * x() + u().pow(2) * v() * x().pow(2) - u() * v().pow(2) * x().pow(2);
  out.push_back(compare("solve_fk_uv k=3 vs closed", solve_fk_uv(3, N, table), RationalGF{num3, den3}.expand(N)));
  out.push_back(compare("solve_fk_counting k=3 vs F3_counting", solve_fk_counting(3, N), closed_form(ClosedFormId::F3_counting).expand(N)));
  out.push_back(compare("solve_fk_counting k=4 vs F4_counting", solve_fk_counting(4, N), closed_form(ClosedFormId::F4_counting).expand(N)));
  for (int k = 2; k <= 6; ++k)
    out.push_back(compare("solve_fk_uv k=" + std::to_string(k) + " vs solve_fk", solve_fk_uv(k, N, table),
                          solve_fk(k, N, table, {false, opt.limits}).full.specialize({Var::p, Var::q, Var::s, Var::t})));
  return out;
}

inline std::vector<Check> symmetry(const VerifyOptions& opt) {
  const int N = opt.max_n;
  std::vector<Check> out;
  const auto table = xn_table(std::min(N, 4), opt.limits);
  for (int k = 3; k <= 6; ++k) {
    const auto ut = solve_fk(k, N, table, {false, opt.limits}).full.specialize({Var::p, Var::q, Var::v, Var::s});
    out.push_back(compare("u<->t k=" + std::to_string(k), ut, ut.swap_vars(Var::u, Var::t)));
  }
  const auto f3 = f3_gf().expand(N), f4 = f4_gf().expand(N);
  out.push_back(compare("F3_xu vs F3", closed_form(ClosedFormId::F3_xu).expand(N), keep_only(f3, Var::u)));
  out.push_back(compare("F3_xt vs F3", closed_form(ClosedFormId::F3_xt).expand(N), keep_only(f3, Var::t)));
  out.push_back(compare("F4_xu vs F4", closed_form(ClosedFormId::F4_xu).expand(N), keep_only(f4, Var::u)));
  out.push_back(compare("F4_xt vs F4", closed_form(ClosedFormId::F4_xt).expand(N), keep_only(f4, Var::t)));
  for (int k = 2; k <= 6; ++k) {
    bool ok = true;
    std::string bad;
    for (int n = 0; n <= N && ok; ++n)
      for (const auto& p : enumerate_class(n, flat_pop(k), opt.limits))
        if (!avoids_pop(inverse(p), flat_pop(k)) || !is_separable(inverse(p))) {
          ok = false;
          bad = p.to_string();
          break;
        }
    out.push_back(expect("inverse closure k=" + std::to_string(k), ok, "inverse leaves the class at " + bad));
  }
  return out;
}

inline std::vector<Check> structure(const VerifyOptions& opt) {
  const int N = opt.max_n;
  std::vector<Check> out;
  for (int k = 2; k <= 6; ++k) {
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= N && ok; ++n)
      for (const auto& [pos, count] : position_of_max_histogram(n, k, opt.limits))
        if (pos > k - 1) ok = false, bad = "n=" + std::to_string(n) + " position " + std::to_string(pos);
    out.push_back(expect("max position <= k-1, k=" + std::to_string(k), ok, bad));
  }
  {
    const int top = std::min(N + 1, opt.limits.max_enumeration_n);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= top && ok; ++n)
      for (const auto& p : generate_separable(n, opt.limits))
        if (stankova_decompose(p).recompose() != p) {
          ok = false;
          bad = p.to_string();
          break;
        }
    out.push_back(expect("Stankova round trip n<=" + std::to_string(top), ok, "fails at " + bad));
  }
  {
    bool ok = true;
    std::string bad;
    for (int n = 0; n <= N && ok; ++n) {
      auto p = Permutation::identity(n);
      std::vector<int> v(p.values().begin(), p.values().end());
      do {
        const Permutation q(v);
        const auto s = stat_vector(q), r = stat_vector(reverse(q)), c = stat_vector(complement(q)), i = stat_vector(inverse(q));
        const bool rev = r == StatVector{s.des, s.asc, s.rlmax, s.lrmax, s.rlmin, s.lrmin};
        const bool comp = c == StatVector{s.des, s.asc, s.lrmin, s.rlmin, s.lrmax, s.rlmax};
        const bool inv = i.lrmax == s.rlmin && i.rlmin == s.lrmax;
        if (!(rev && comp && inv)) {
          ok = false;
          bad = q.to_string();
          break;
        }
      } while (std::next_permutation(v.begin(), v.end()));
    }
    out.push_back(expect("statistic laws under reverse, complement, inverse", ok, "fails at " + bad));
  }
  {
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= N; ++n) {
      std::uint64_t prev = 0;
      for (int k = 1; k <= 7; ++k) {
        const auto count = static_cast<std::uint64_t>(enumerate_class(n, flat_pop(k), opt.limits).size());
        if (count < prev) ok = false, bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        prev = count;
      }
    }
    out.push_back(expect("class counts nondecreasing in k", ok, bad));
  }
  {
    bool ok = true;
    for (int n = 1; n <= std::min(N, opt.limits.max_enumeration_n); ++n)
      ok = ok && mpz_class(static_cast<unsigned long>(generate_separable(n, opt.limits).size())) == schroder(n - 1);
    out.push_back(expect("separable counts are Schroder numbers", ok));
  }
  return out;
}

inline std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& opt) {
  if (suite == "closed-vs-oracle") return closed_vs_oracle(opt);
  if (suite == "thm4-vs-oracle") return thm4_vs_oracle(opt);
  if (suite == "thm4-vs-closed") return thm4_vs_closed(opt);
  if (suite == "symmetry") return symmetry(opt);
  if (suite == "structure") return structure(opt);
  if (suite == "all") {
    std::vector<Check> out;
    for (auto name : suite_names)
      if (name != "all")
        for (auto& c : run_suite(name, opt)) out.push_back(std::move(c));
    return out;
  }
  throw DomainError("unknown suite " + std::string(suite));
}

inline bool report(std::ostream& os, const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    all = all && c.passed;
  }
  return all;
}

}  // namespace popdist::verify
