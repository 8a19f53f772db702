#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "permutation.hpp"
#include "separable.hpp"
#include "series.hpp"
#include "stats.hpp"

// Brute-force ground truth. Nothing here touches generating-function
// machinery: classes are enumerated and filtered by direct occurrence search.

namespace popdist {

inline void check_enumeration_bound(int n, const Limits& limits) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (n > limits.max_enumeration_n)
    throw LimitError("enumeration length " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(limits.max_enumeration_n));
}

/// S_n(2413, 3142), further restricted to avoid pop when given. Lexicographic.
inline std::vector<Permutation> enumerate_class(int n, const std::optional<PopPattern>& pop,
                                                const Limits& limits = Limits::from_env()) {
  check_enumeration_bound(n, limits);
  auto perms = generate_separable(n, limits);
  if (!pop) return perms;
  std::vector<Permutation> out;
  for (auto& p : perms)
    if (avoids_pop(p, *pop)) out.push_back(std::move(p));
  return out;
}

/// Joint distribution of the six statistics over one class at one length.
struct DistributionTable {
  int n = 0;
  std::optional<PopPattern> pop;
  std::map<StatExponents, std::uint64_t> rows;

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [e, c] : rows) sum += c;
    return sum;
  }
};

inline DistributionTable distribution_table(int n, const std::optional<PopPattern>& pop,
                                            const Limits& limits = Limits::from_env()) {
  DistributionTable table{n, pop, {}};
  for (const auto& p : enumerate_class(n, pop, limits)) ++table.rows[monomial(p)];
  return table;
}

/// The table as the polynomial sum of x^n times the statistic monomials.
inline Polynomial to_polynomial(const DistributionTable& table) {
  std::vector<Term> terms;
  for (const auto& [e, c] : table.rows)
    terms.push_back({Monomial(Exponents{table.n, e[0], e[1], e[2], e[3], e[4], e[5]}), mpq_class(mpz_class(c))});
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return Polynomial::from_terms(std::move(terms));
}

/// Distribution series of the class avoiding 2413, 3142 and the given POP
/// (none for all separable permutations), through x^order.
inline TruncSeries oracle_series(const std::optional<PopPattern>& pop, int order, const Limits& limits = Limits::from_env()) {
  check_enumeration_bound(order, limits);
  Polynomial sum;
  for (int n = 0; n <= order; ++n) sum += to_polynomial(distribution_table(n, pop, limits));
  return sum.truncate(order);
}

/// Distribution series F_k computed by enumeration, k >= 1.
inline TruncSeries oracle_series(int k, int order, const Limits& limits = Limits::from_env()) {
  return oracle_series(std::optional<PopPattern>(flat_pop(k)), order, limits);
}

/// Histogram of the 1-based position of the maximum over the P_k class.
inline std::map<int, std::uint64_t> position_of_max_histogram(int n, int k, const Limits& limits = Limits::from_env()) {
  if (n < 1) throw DomainError("position_of_max_histogram needs n >= 1");
  std::map<int, std::uint64_t> hist;
  for (const auto& p : enumerate_class(n, flat_pop(k), limits)) ++hist[p.position_of_max() + 1];
  return hist;
}

}  // namespace popdist
