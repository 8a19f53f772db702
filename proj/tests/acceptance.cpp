#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <popdist/closed_forms.hpp>
#include <popdist/oracle.hpp>
#include <popdist/pop_solver.hpp>
#include <popdist/separable.hpp>
#include <popdist/stats.hpp>
#include <popdist/verify.hpp>

using namespace popdist;
using namespace popdist::vars;

namespace {

const std::initializer_list<Var> stats{Var::p, Var::q, Var::u, Var::v, Var::s, Var::t};
const Limits limits{};

TruncSeries counts(std::initializer_list<long> c) {
  Polynomial p;
  int n = 0;
  for (long v : c) p += Polynomial(v) * x().pow(n++);
  return p.truncate(n - 1);
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool same(const TruncSeries& a, const TruncSeries& b, const std::string& what, std::string& why) {
  if (auto d = first_difference(a, b)) {
    why = what + " differs at " + to_string(d->mono) + ": " + d->lhs.get_str() + " vs " + d->rhs.get_str();
    return false;
  }
  if (a.order() != b.order()) {
    why = what + " has mismatched orders";
    return false;
  }
  return true;
}

bool counting_k3(std::string& why) {
  const auto expected = counts({1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512});
  return same(RationalGF{1 - x(), 1 - 2 * x()}.expand(10), expected, "(1-x)/(1-2x)", why) &&
         same(solve_fk_counting(3, 10), expected, "solve_fk_counting(3,10)", why);
}

bool counting_k4(std::string& why) {
  const auto expected = counts({1, 1, 2, 6, 16, 42, 112, 300, 804, 2156, 5784});
  if (enumerate_class(4, flat_pop(4), limits).size() != 16) {
    why = "oracle count at n=4 is not 16";
    return false;
  }
  return same(f4_gf().specialize(stats).expand(10), expected, "F4 all-ones", why) &&
         same(solve_fk_counting(4, 10), expected, "solve_fk_counting(4,10)", why);
}

bool transcription(std::string& why) {
  const auto a = f4_numerator().size(), b = f4_denominator().size();
  why = "numerator " + std::to_string(a) + ", denominator " + std::to_string(b);
  return a == 100 && b == 19;
}

bool master_oracle(std::string& why) {
  const auto table = xn_table(4, limits);
  for (int k = 2; k <= 6; ++k) {
    const auto full = solve_fk(k, 8, table, {false, limits}).full;
    const auto o = oracle_series(k, 8, limits);
    if (!same(full, o, "k=" + std::to_string(k) + " solver vs oracle", why)) return false;
    if (k == 3 && !same(full, f3_gf().expand(8), "k=3 solver vs closed form", why)) return false;
    if (k == 4 && !same(full, f4_gf().expand(8), "k=4 solver vs closed form", why)) return false;
  }
  return true;
}

bool f3_initial_terms(std::string& why) {
  const Polynomial expected = 1 + u() * v() * s() * t() * x() +
                              (p() * u().pow(2) * v() * s() * t().pow(2) + q() * u() * v().pow(2) * s().pow(2) * t()) * x().pow(2) +
                              (p() * q() * u().pow(2) * v().pow(2) * s() * t().pow(2) + p() * q() * u().pow(2) * v().pow(2) * s().pow(2) * t() +
                               p() * q() * u() * v().pow(2) * s().pow(2) * t().pow(2) + q().pow(2) * u() * v().pow(3) * s().pow(3) * t()) *
                                  x().pow(3);
  return same(solve_fk(3, 3).full, expected.truncate(3), "solve_fk(3,3)", why);
}

bool lmax_expansion(std::string& why) {
  const auto l = lmax_separable_series(9);
  if (!l.has_integer_coefficients()) {
    why = "non-integer coefficient";
    return false;
  }
  const auto o = oracle_series(std::nullopt, 9, limits).specialize({Var::p, Var::q, Var::v, Var::s, Var::t});
  if (!same(l, o - TruncSeries::one(9), "lrmax series vs oracle", why)) return false;
  for (int n = 1; n <= 9; ++n)
    if (l.x_slice(n).specialize({Var::u}) != Polynomial(mpq_class(schroder(n - 1)))) {
      why = "row sum at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool cubic(std::string& why) {
  const auto S = s_tpq_series(9);
  if (!s_tpq_residual(S).is_zero()) {
    why = "nonzero residual";
    return false;
  }
  const auto o = oracle_series(std::nullopt, 9, limits).specialize({Var::u, Var::v, Var::s, Var::t});
  return same(S, o - TruncSeries::one(9), "S(t,p,q) vs oracle asc/des", why) &&
         same(S.specialize({Var::p, Var::q}), counts({0, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586}), "S(t,1,1)", why);
}

bool symmetry(std::string& why) {
  const auto table = xn_table(3, limits);
  for (int k = 3; k <= 5; ++k) {
    const auto ut = solve_fk(k, 8, table, {false, limits}).full.specialize({Var::p, Var::q, Var::v, Var::s});
    if (!same(ut, ut.swap_vars(Var::u, Var::t), "u<->t at k=" + std::to_string(k), why)) return false;
  }
  const auto f3 = f3_gf().expand(10), f4 = f4_gf().expand(10);
  return same(closed_form(ClosedFormId::F3_xu).expand(10), verify::keep_only(f3, Var::u), "F3_xu", why) &&
         same(closed_form(ClosedFormId::F3_xt).expand(10), verify::keep_only(f3, Var::t), "F3_xt", why) &&
         same(closed_form(ClosedFormId::F4_xu).expand(10), verify::keep_only(f4, Var::u), "F4_xu", why) &&
         same(closed_form(ClosedFormId::F4_xt).expand(10), verify::keep_only(f4, Var::t), "F4_xt", why);
}

bool structure(std::string& why) {
  for (int k = 2; k <= 6; ++k)
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : enumerate_class(n, flat_pop(k), limits))
        if (p.position_of_max() + 1 > k - 1) {
          why = "maximum too far right in " + p.to_string();
          return false;
        }
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : generate_separable(n, limits))
      if (stankova_decompose(p).recompose() != p) {
        why = "Stankova round trip fails at " + p.to_string();
        return false;
      }
  for (int n = 0; n <= 8; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
      const Permutation p(v);
      const auto s = stat_vector(p);
      if (stat_vector(reverse(p)) != StatVector{s.des, s.asc, s.rlmax, s.lrmax, s.rlmin, s.lrmin} ||
          stat_vector(complement(p)) != StatVector{s.des, s.asc, s.lrmin, s.rlmin, s.lrmax, s.rlmax}) {
        why = "statistic law fails at " + p.to_string();
        return false;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return true;
}

bool uv_consistency(std::string& why) {
  const Polynomial den = 1 - 2 * v() * x() - v() * x().pow(2) + v().pow(2) * x().pow(2);
  const Polynomial num = den + u() * v() * x() + u().pow(2) * v() * x().pow(2) - u() * v().pow(2) * x().pow(2);
  if (!same(solve_fk_uv(3, 10, limits), RationalGF{num, den}.expand(10), "solve_fk_uv(3,10)", why)) return false;
  const auto table = xn_table(4, limits);
  for (int k = 2; k <= 6; ++k)
    if (!same(solve_fk_uv(k, 8, table), solve_fk(k, 8, table, {false, limits}).full.specialize({Var::p, Var::q, Var::s, Var::t}),
              "uv system at k=" + std::to_string(k), why))
      return false;
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counting k=3", 1, counting_k3},
      {2, "counting k=4", 1, counting_k4},
      {3, "F4 transcription checksum", 1, transcription},
      {4, "solver = oracle for k=2..6, closed forms for k=3,4", 180, master_oracle},
      {5, "F3 initial terms", 1, f3_initial_terms},
      {6, "lrmax series on separable permutations", 60, lmax_expansion},
      {7, "cubic for S(t,p,q)", 60, cubic},
      {8, "u<->t symmetry and single-statistic forms", 60, symmetry},
      {9, "maximum position, Stankova round trip, statistic laws", 60, structure},
      {10, "(x,u,v) system", 60, uv_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      why = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::printf("criterion %2d %s  %.3f s  %s%s%s\n", c.id, ok ? "PASS" : "FAIL", secs, c.title.c_str(),
                ok ? "" : "  -- ", ok ? "" : why.c_str());
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
