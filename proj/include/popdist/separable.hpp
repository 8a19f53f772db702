#pragma once

#include <algorithm>
#include <gmpxx.h>
#include <numeric>
#include <string>
#include <vector>

#include "config.hpp"
#include "permutation.hpp"

namespace popdist {

inline const PopPattern& pattern_2413() {
  static const PopPattern pat = PopPattern::chain(Permutation{2, 4, 1, 3});
  return pat;
}

inline const PopPattern& pattern_3142() {
  static const PopPattern pat = PopPattern::chain(Permutation{3, 1, 4, 2});
  return pat;
}

/// Separable means avoiding both 2413 and 3142; ε is separable.
inline bool is_separable(const Permutation& p) {
  return avoids_pop(p, pattern_2413()) && avoids_pop(p, pattern_3142());
}

/// Large Schröder numbers 1, 2, 6, 22, 90, ... via
/// (n+1) s_n = 3(2n-1) s_{n-1} - (n-2) s_{n-2}.
inline mpz_class schroder(int n) {
  if (n < 0) throw DomainError("schroder needs n >= 0");
  mpz_class prev = 1, cur = 2;
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    mpz_class next = (3 * (2 * m - 1) * cur - (m - 2) * prev) / (m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Every permutation of length n, filtered by is_separable. Lexicographic.
inline std::vector<Permutation> generate_separable_by_filter(int n) {
  if (n < 0) throw DomainError("length must be non-negative");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (is_separable(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace detail {

inline bool is_direct_sum(const Permutation& p) {
  int running_max = 0;
  for (int i = 1; i < p.size(); ++i) {
    running_max = std::max(running_max, p[i]);
    if (running_max == i) return true;
  }
  return false;
}

inline bool is_skew_sum(const Permutation& p) {
  int running_min = p.size() + 1;
  for (int i = 1; i < p.size(); ++i) {
    running_min = std::min(running_min, p[i]);
    if (running_min == p.size() - i + 1) return true;
  }
  return false;
}

}  // namespace detail

/// Builds separable permutations from 1 by direct and skew sums. Each
/// permutation of length >= 2 is produced once, as a (+)-indecomposable or
/// (-)-indecomposable head joined with an arbitrary tail. Lexicographic.
inline std::vector<Permutation> generate_separable_by_construction(int n) {
  if (n < 0) throw DomainError("length must be non-negative");
  std::vector<std::vector<Permutation>> by_len(static_cast<std::size_t>(std::max(n, 1)) + 1);
  by_len[0] = {Permutation{}};
  if (n == 0) return by_len[0];
  by_len[1] = {Permutation{1}};
  for (int len = 2; len <= n; ++len) {
    auto& bucket = by_len[static_cast<std::size_t>(len)];
    for (int head = 1; head < len; ++head) {
      for (const auto& a : by_len[static_cast<std::size_t>(head)]) {
        const bool sum_head = !detail::is_direct_sum(a);
        const bool skew_head = !detail::is_skew_sum(a);
        if (!sum_head && !skew_head) continue;
        for (const auto& b : by_len[static_cast<std::size_t>(len - head)]) {
          if (sum_head) bucket.push_back(direct_sum(a, b));
          if (skew_head) bucket.push_back(skew_sum(a, b));
        }
      }
    }
    std::sort(bucket.begin(), bucket.end());
  }
  return std::move(by_len[static_cast<std::size_t>(n)]);
}

/// All separable permutations of length n in lexicographic order.
inline std::vector<Permutation> generate_separable(int n, const Limits& limits = Limits{}) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (n > limits.max_separable_n)
    throw LimitError("separable enumeration length " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(limits.max_separable_n));
  return n <= 10 ? generate_separable_by_filter(n) : generate_separable_by_construction(n);
}

/// π = L_1 ... L_m n R_m ... R_1 with R_1 < L_1 < R_2 < ... < R_m < L_m.
///
/// Blocks are kept in standardized form. left[i] is L_{i+1} and right[i] is
/// R_{i+1}, so the right blocks appear in π in reverse vector order.
struct StankovaDecomposition {
  std::vector<Permutation> left;
  std::vector<Permutation> right;

  int blocks() const { return static_cast<int>(left.size()); }

  int length() const {
    int n = 1;
    for (const auto& b : left) n += b.size();
    for (const auto& b : right) n += b.size();
    return n;
  }

  Permutation recompose() const {
    const int m = blocks();
    std::vector<int> left_offset(static_cast<std::size_t>(m)), right_offset(static_cast<std::size_t>(m));
    int offset = 0;
    for (int i = 0; i < m; ++i) {
      right_offset[static_cast<std::size_t>(i)] = offset;
      offset += right[static_cast<std::size_t>(i)].size();
      left_offset[static_cast<std::size_t>(i)] = offset;
      offset += left[static_cast<std::size_t>(i)].size();
    }
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(offset + 1));
    for (int i = 0; i < m; ++i)
      for (int x : left[static_cast<std::size_t>(i)].values()) v.push_back(x + left_offset[static_cast<std::size_t>(i)]);
    v.push_back(offset + 1);
    for (int i = m - 1; i >= 0; --i)
      for (int x : right[static_cast<std::size_t>(i)].values()) v.push_back(x + right_offset[static_cast<std::size_t>(i)]);
    return Permutation(std::move(v));
  }
};

/// Splits a separable permutation around its maximum into maximal interval
/// blocks. The values 1..n-1 fall into maximal runs lying on the same side of
/// n; these runs are the blocks, alternating R_1, L_1, R_2, ... from the
/// bottom. The positional layout is then validated.
inline StankovaDecomposition stankova_decompose(const Permutation& p) {
  if (p.empty()) throw DomainError("the empty permutation has no Stankova decomposition");
  if (!is_separable(p)) throw DomainError("permutation " + p.to_string() + " is not separable");
  const int n = p.size();
  const int max_pos = p.position_of_max() + 1;  // 1-based
  const auto inv = inverse(p);

  // Runs of consecutive values on one side of n, bottom up.
  struct Run {
    bool on_left;
    int lo, hi;
  };
  std::vector<Run> runs;
  for (int value = 1; value < n; ++value) {
    const bool on_left = inv[value] < max_pos;
    if (runs.empty() || runs.back().on_left != on_left)
      runs.push_back({on_left, value, value});
    else
      runs.back().hi = value;
  }

  auto block_of = [&](int lo, int hi) {
    std::vector<int> positions;
    for (int value = lo; value <= hi; ++value) positions.push_back(inv[value]);
    std::sort(positions.begin(), positions.end());
    std::vector<int> vals;
    for (int pos : positions) vals.push_back(p[pos]);
    return std::pair{positions, standardize(vals)};
  };

  StankovaDecomposition d;
  if (runs.empty()) {
    d.left.emplace_back();
    d.right.emplace_back();
    return d;
  }
  if (runs.front().on_left) d.right.emplace_back();  // R_1 = ε
  std::vector<std::vector<int>> left_positions, right_positions;
  if (!d.right.empty()) right_positions.emplace_back();
  for (const auto& run : runs) {
    auto [positions, block] = block_of(run.lo, run.hi);
    if (run.on_left) {
      d.left.push_back(std::move(block));
      left_positions.push_back(std::move(positions));
    } else {
      d.right.push_back(std::move(block));
      right_positions.push_back(std::move(positions));
    }
  }
  if (d.left.size() < d.right.size()) {  // L_m = ε
    d.left.emplace_back();
    left_positions.emplace_back();
  }

  // Left blocks must fill positions 1.. in order, right blocks fill from n
  // backwards, each block occupying a contiguous stretch.
  int expect = 1;
  for (const auto& pos : left_positions)
    for (int q : pos)
      if (q != expect++) throw DomainError("Stankova layout violated in " + p.to_string());
  expect = n;
  for (const auto& pos : right_positions)
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
      if (*it != expect--) throw DomainError("Stankova layout violated in " + p.to_string());
  return d;
}

}  // namespace popdist
