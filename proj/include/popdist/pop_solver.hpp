#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "separable.hpp"
#include "series.hpp"
#include "stats.hpp"

namespace popdist {

/// X_n(p,q,u,v,s,t): the six-statistic distribution over separable
/// permutations of length n, for 0 <= n <= max_n. X_0 = 1.
struct XnTable {
  int max_n = 0;
  std::vector<Polynomial> entries;

  const Polynomial& operator[](int n) const {
    if (n < 0 || n > max_n) throw LimitError("X_" + std::to_string(n) + " is outside the table (max " + std::to_string(max_n) + ")");
    return entries[static_cast<std::size_t>(n)];
  }
};

/// Builds X_1..X_max_n by enumerating separable permutations.
inline XnTable xn_table(int max_n, const Limits& limits = Limits::from_env()) {
  if (max_n < 0) throw DomainError("xn_table needs max_n >= 0");
  if (max_n > limits.max_enumeration_n)
    throw LimitError("X_n table up to " + std::to_string(max_n) + " exceeds the enumeration bound " +
                     std::to_string(limits.max_enumeration_n));
  XnTable table{max_n, {}};
  for (int n = 0; n <= max_n; ++n) {
    std::map<StatExponents, long> counts;
    for (const auto& p : generate_separable(n, limits)) ++counts[monomial(p)];
    std::vector<Term> terms;
    for (const auto& [e, c] : counts) terms.push_back({Monomial(Exponents{0, e[0], e[1], e[2], e[3], e[4], e[5]}), mpq_class(c)});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    table.entries.push_back(Polynomial::from_terms(std::move(terms)));
  }
  return table;
}

/// Output of the general-k solver.
struct FkResult {
  int k = 0;
  int order = 0;
  TruncSeries full{0};
  /// full at u = 1, obtained from the fixed-point stage.
  TruncSeries u1{0};
  /// f_{k,i} and g_{k,i} for i = 0..k-2, all seven variables. Empty when
  /// tracing is off.
  std::vector<TruncSeries> f;
  std::vector<TruncSeries> g;
};

struct SolverOptions {
  /// Keep f_{k,i}, g_{k,i}; defaults to on for k <= 6.
  std::optional<bool> keep_trace;
  Limits limits = Limits::from_env();
};

namespace detail {

inline AffineSeries lift(const TruncSeries& s, const AffineSeries*) { return AffineSeries::known(s); }
inline TruncSeries lift(const TruncSeries& s, const TruncSeries*) { return s; }

template <class Val>
Val lift_as(const TruncSeries& s) {
  return lift(s, static_cast<const Val*>(nullptr));
}

inline Polynomial x_pow(int n) { return Polynomial(Monomial::of(Var::x, n)); }

/// f_{k,i}, g_{k,i} for one k, evaluated either with u = 1 throughout
/// (Val = AffineSeries, F_k(x,p,q,1,v,s,t) unknown) or with general u
/// (Val = TruncSeries, F_k(x,p,q,1,v,s,t) known).
template <class Val>
struct FgSystem {
  std::vector<Val> f;
  std::vector<Val> g;
};

class Theorem4Context {
public:
  Theorem4Context(int order, XnTable table, bool keep_trace) : order_(order), table_(std::move(table)), keep_trace_(keep_trace) {}

  const FkResult& solve(int k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    FkResult r = k == 2 ? solve_two() : solve_general(k);
    return memo_.emplace(k, std::move(r)).first->second;
  }

private:
  /// F_j with the given variables set to 1; only indices below the one being
  /// solved may be looked up.
  TruncSeries lower(int j, int k, VarSet to_one) {
    if (j >= k || j < 2)
      throw std::logic_error("recursion references F_" + std::to_string(j) + " while solving F_" + std::to_string(k));
    return solve(j).full.specialize(to_one);
  }

  /// X_i with the given variables set to 1 and, in the u = 1 stage, u too.
  Polynomial X(int i, VarSet to_one, bool general_u) const {
    auto px = table_[i].specialize(to_one);
    return general_u ? px : px.specialize({Var::u});
  }

  FkResult solve_two() {
    using namespace vars;
    FkResult r;
    r.k = 2;
    r.order = order_;
    const auto f20 = RationalGF{u() * v() * s() * t() * x(), 1 - q() * v() * s() * x()}.expand(order_);
    r.full = TruncSeries::one(order_) + f20;
    r.u1 = r.full.specialize({Var::u});
    if (keep_trace_) {
      r.f = {f20};
      r.g = {TruncSeries(order_)};
    }
    return r;
  }

  template <class Val>
  FgSystem<Val> assemble(int k, bool general_u, const Val& fk_minus_one) {
    using namespace vars;
    const Polynomial P = p(), Q = q(), V = v(), S = s(), T = t();
    const Polynomial U = general_u ? u() : Polynomial(1L);
    const auto one = TruncSeries::one(order_);
    auto fm1 = [&](int j, VarSet to_one) { return lower(j, k, to_one) - one; };

    FgSystem<Val> sys;
    // i = 0: n first, so n-1 lies to its right.
    sys.f.push_back(lift_as<Val>((U * V * S * T * x()).truncate(order_)) + (Q * U * V * S * x()) * fk_minus_one);
    sys.g.push_back(lift_as<Val>(TruncSeries(order_)));

    const int last = std::min(k - 2, order_);
    for (int i = 1; i <= last; ++i) {
      const Polynomial xi1 = x_pow(i + 1);
      const auto Fki_t = fm1(k - i, {Var::u, Var::s});           // F_{k-i}(x,p,q,1,v,1,t) - 1
      const auto Fki_1 = fm1(k - i, {Var::u, Var::s, Var::t});   // F_{k-i}(x,p,q,1,v,1,1) - 1
      const auto Xi_st = X(i, {Var::v}, general_u);                // X_i(p,q,u,1,s,t)
      const auto Xi_s = X(i, {Var::v, Var::t}, general_u);         // X_i(p,q,u,1,s,1)

      Val f = lift_as<Val>((P * Q * U * V * xi1 * Xi_st) * Fki_t) +
              ((P * Q * Q * U * V * xi1 * Xi_s) * Fki_1) * fk_minus_one;
      Val g = lift_as<Val>((P * U * V * T * xi1 * Xi_st).truncate(order_)) + (P * Q * U * V * xi1 * Xi_s) * fk_minus_one;

      for (int j = 1; j <= i - 1; ++j) {
        const auto Xj = X(j, {Var::v, Var::s, Var::t}, general_u);  // X_j(p,q,u,1,1,1)
        const auto Xij_st = X(i - j, {Var::v}, general_u);         // X_{i-j}(p,q,u,1,s,t)
        f += (P * Q * Xj * x_pow(j)) * (Fki_1 * sys.f[static_cast<std::size_t>(i - j)]);

        g += lift_as<Val>((P * P * Q * U * V * xi1 * Xj * Xij_st) * fm1(k - i + j, {Var::u, Var::s}));
        const Val g_rest = sys.g[static_cast<std::size_t>(i - j)] -
                           lift_as<Val>((P * U * V * T * x_pow(i - j + 1) * Xij_st).truncate(order_));
        g += (P * Q * Xj * x_pow(j)) * (fm1(k - i + j, {Var::u, Var::s, Var::t}) * g_rest);
      }
      sys.f.push_back(std::move(f));
      sys.g.push_back(std::move(g));
    }
    // Higher i only contribute beyond x^order.
    for (int i = last + 1; i <= k - 2; ++i) {
      sys.f.push_back(lift_as<Val>(TruncSeries(order_)));
      sys.g.push_back(lift_as<Val>(TruncSeries(order_)));
    }
    return sys;
  }

  FkResult solve_general(int k) {
    const auto one = TruncSeries::one(order_);

    // Stage 1: u = 1, affine in the unknown F_k(x,p,q,1,v,s,t).
    const auto unknown_minus_one = AffineSeries::unknown(order_) - AffineSeries::known(one);
    auto sys1 = assemble<AffineSeries>(k, false, unknown_minus_one);
    AffineSeries total = AffineSeries::known(one);
    for (std::size_t i = 0; i < sys1.f.size(); ++i) total += sys1.f[i] + sys1.g[i];
    const auto u1 = solve_affine(total);

    // Stage 2: general u with the u = 1 solution substituted.
    auto sys2 = assemble<TruncSeries>(k, true, u1 - one);
    TruncSeries full = one;
    for (std::size_t i = 0; i < sys2.f.size(); ++i) full += sys2.f[i] + sys2.g[i];

    FkResult r;
    r.k = k;
    r.order = order_;
    r.full = std::move(full);
    r.u1 = u1;
    if (keep_trace_) {
      r.f = std::move(sys2.f);
      r.g = std::move(sys2.g);
    }
    return r;
  }

  int order_;
  XnTable table_;
  bool keep_trace_;
  std::map<int, FkResult> memo_;
};

inline void check_solver_args(int k, int order) {
  if (k < 2) throw DomainError("the solver needs k >= 2");
  if (order < 0) throw DomainError("truncation order must be non-negative");
  if (order > TruncSeries::max_order) throw LimitError("truncation order " + std::to_string(order) + " is too large");
}

/// X_i is needed for i <= min(k-2, order).
inline int table_size_for(int k, int order) { return std::max(0, std::min(k - 2, order)); }

}  // namespace detail

/// F_k(x,p,q,u,v,s,t) through x^order from the f/g functional-equation
/// system: F_j for j < k first, then a fixed point at u = 1, then direct
/// evaluation for general u.
inline FkResult solve_fk(int k, int order, const XnTable& table, const SolverOptions& options = {}) {
  detail::check_solver_args(k, order);
  const int need = detail::table_size_for(k, order);
  if (table.max_n < need) throw LimitError("X_n table too small: need X_" + std::to_string(need));
  const bool trace = options.keep_trace.value_or(k <= 6);
  detail::Theorem4Context ctx(order, table, trace);
  return ctx.solve(k);
}

inline FkResult solve_fk(int k, int order, const SolverOptions& options = {}) {
  detail::check_solver_args(k, order);
  return solve_fk(k, order, xn_table(detail::table_size_for(k, order), options.limits), options);
}

namespace detail {

/// The (x,u,v) system; F_j memoized as full (x,u,v) series.
class UvContext {
public:
  UvContext(int order, std::vector<Polynomial> lrmax) : order_(order), lrmax_(std::move(lrmax)) {}

  const TruncSeries& solve(int k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    TruncSeries r = k == 2 ? solve_two() : solve_general(k);
    return memo_.emplace(k, std::move(r)).first->second;
  }

private:
  TruncSeries lower(int j, int k) {
    if (j >= k || j < 2) throw std::logic_error("recursion references F_" + std::to_string(j) + " while solving F_" + std::to_string(k));
    return solve(j).specialize({Var::u});
  }

  TruncSeries solve_two() {
    using namespace vars;
    return TruncSeries::one(order_) + RationalGF{u() * v() * x(), 1 - v() * x()}.expand(order_);
  }

  template <class Val>
  Val assemble(int k, bool general_u, const Val& fk) {
    using namespace vars;
    const Polynomial U = general_u ? u() : Polynomial(1L);
    const auto one = TruncSeries::one(order_);
    auto Xu = [&](int i) { return general_u ? lrmax_[static_cast<std::size_t>(i)] : lrmax_[static_cast<std::size_t>(i)].specialize({Var::u}); };

    std::vector<Val> f, g;
    f.push_back((U * v() * x()) * fk);
    g.push_back(lift_as<Val>(TruncSeries(order_)));
    const int last = std::min(k - 2, order_);
    for (int i = 1; i <= last; ++i) {
      const auto Fki = lower(k - i, k) - one;
      Val fi = lift_as<Val>(TruncSeries(order_));
      for (int j = 1; j <= i; ++j) fi += (Xu(j) * x_pow(j)) * (Fki * f[static_cast<std::size_t>(i - j)]);
      Val gi = (U * v() * x_pow(i + 1) * Xu(i)) * fk;
      for (int j = 1; j <= i - 1; ++j)
        gi += (Xu(j) * x_pow(j)) * ((lower(k - i + j, k) - one) * g[static_cast<std::size_t>(i - j)]);
      f.push_back(std::move(fi));
      g.push_back(std::move(gi));
    }
    Val total = lift_as<Val>(one);
    for (std::size_t i = 0; i < f.size(); ++i) total += f[i] + g[i];
    return total;
  }

  TruncSeries solve_general(int k) {
    const auto u1 = solve_affine(assemble<AffineSeries>(k, false, AffineSeries::unknown(order_)));
    return assemble<TruncSeries>(k, true, u1);
  }

  int order_;
  std::vector<Polynomial> lrmax_;
  std::map<int, TruncSeries> memo_;
};

/// The counting system with Schröder weights s_{i-1}.
class CountingContext {
public:
  explicit CountingContext(int order) : order_(order) {}

  const TruncSeries& solve(int k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    TruncSeries r = k == 2 ? solve_two() : solve_general(k);
    return memo_.emplace(k, std::move(r)).first->second;
  }

private:
  const TruncSeries& lower(int j, int k) {
    if (j >= k || j < 2) throw std::logic_error("recursion references F_" + std::to_string(j) + " while solving F_" + std::to_string(k));
    return solve(j);
  }

  TruncSeries solve_two() {
    using namespace vars;
    return TruncSeries::one(order_) + RationalGF{x(), 1 - x()}.expand(order_);
  }

  TruncSeries solve_general(int k) {
    const auto one = TruncSeries::one(order_);
    const auto F = AffineSeries::unknown(order_);
    auto weight = [](int i) { return Polynomial(mpq_class(schroder(i - 1))) * x_pow(i); };  // s_{i-1} x^i

    std::vector<AffineSeries> f{x_pow(1) * F}, g{AffineSeries::known(TruncSeries(order_))};
    const int last = std::min(k - 2, order_);
    for (int i = 1; i <= last; ++i) {
      const auto Fki = lower(k - i, k) - one;
      AffineSeries fi = (weight(i) * x_pow(1)) * (Fki * F);
      for (int j = 1; j <= i - 1; ++j) fi += weight(j) * (Fki * f[static_cast<std::size_t>(i - j)]);
      AffineSeries gi = (weight(i) * x_pow(1)) * F;
      for (int j = 1; j <= i - 1; ++j) gi += weight(j) * ((lower(k - i + j, k) - one) * g[static_cast<std::size_t>(i - j)]);
      f.push_back(std::move(fi));
      g.push_back(std::move(gi));
    }
    AffineSeries total = AffineSeries::known(one);
    for (std::size_t i = 0; i < f.size(); ++i) total += f[i] + g[i];
    return solve_affine(total);
  }

  int order_;
  std::map<int, TruncSeries> memo_;
};

}  // namespace detail

/// F_k(x,u,v): lrmax and rlmax only.
inline TruncSeries solve_fk_uv(int k, int order, const XnTable& table) {
  detail::check_solver_args(k, order);
  const int need = detail::table_size_for(k, order);
  if (table.max_n < need) throw LimitError("X_n table too small: need X_" + std::to_string(need));
  std::vector<Polynomial> lrmax;
  for (int i = 0; i <= need; ++i) lrmax.push_back(table[i].specialize({Var::p, Var::q, Var::v, Var::s, Var::t}));
  detail::UvContext ctx(order, std::move(lrmax));
  return ctx.solve(k);
}

inline TruncSeries solve_fk_uv(int k, int order, const Limits& limits = Limits::from_env()) {
  detail::check_solver_args(k, order);
  return solve_fk_uv(k, order, xn_table(detail::table_size_for(k, order), limits));
}

/// F_k(x): the number of permutations in S_n(2413, 3142, P_k).
inline TruncSeries solve_fk_counting(int k, int order) {
  detail::check_solver_args(k, order);
  detail::CountingContext ctx(order);
  return ctx.solve(k);
}

}  // namespace popdist
