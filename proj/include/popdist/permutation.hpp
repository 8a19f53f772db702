#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "config.hpp"

namespace popdist {

/// A permutation of {1..n} in one-line notation; n = 0 is the empty permutation.
class Permutation {
public:
  static constexpr int max_length = Limits{}.max_perm_length;

  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (static_cast<int>(values_.size()) > max_length)
      throw LimitError("permutation length " + std::to_string(values_.size()) +
                       " exceeds the bound " + std::to_string(max_length));
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
        throw DomainError("not a permutation of 1.." + std::to_string(values_.size()));
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Parses "41523", "10,2,1,..." or "ε" (also the empty string).
  static Permutation parse(std::string_view text) {
    if (text.empty() || text == "ε" || text == "e") return {};
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(start, end - start);
        if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw DomainError("malformed permutation: " + std::string(text));
        v.push_back(std::stoi(std::string(field)));
        start = end + 1;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw DomainError("malformed permutation: " + std::string(text));
        v.push_back(c - '0');
      }
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// 1-based entry, matching the one-line notation.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const { return values_; }

  /// Digit string for n <= 9, comma-separated above, "ε" when empty.
  std::string to_string() const {
    if (values_.empty()) return "ε";
    std::string out;
    const bool commas = values_.size() >= 10;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (commas && i > 0) out += ',';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  /// 0-based index of the value n; -1 for ε.
  int position_of_max() const {
    auto it = std::max_element(values_.begin(), values_.end());
    return it == values_.end() ? -1 : static_cast<int>(it - values_.begin());
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.values_ <=> b.values_; }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

private:
  std::vector<int> values_;
};

inline Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

inline Permutation complement(const Permutation& p) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(p.size()));
  for (int x : p.values()) v.push_back(p.size() + 1 - x);
  return Permutation(std::move(v));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p[i] - 1)] = i;
  return Permutation(std::move(v));
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.values().begin(), a.values().end());
  for (int x : b.values()) v.push_back(x + a.size());
  return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  for (int x : a.values()) v.push_back(x + b.size());
  v.insert(v.end(), b.values().begin(), b.values().end());
  return Permutation(std::move(v));
}

/// The permutation order-isomorphic to the given distinct values.
inline Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> v(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) v[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(v));
}

/// A partially ordered pattern: a poset on the labels 1..k.
///
/// A relation (a, b) means label a lies below label b. Relations are kept as
/// given and closed transitively once, at construction.
class PopPattern {
public:
  static constexpr int max_size = 16;

  PopPattern(int size, std::vector<std::pair<int, int>> relations)
      : size_(size), relations_(std::move(relations)), below_(static_cast<std::size_t>(size + 1), 0) {
    if (size < 1) throw DomainError("a POP needs at least one element");
    if (size > max_size) throw LimitError("POP size " + std::to_string(size) + " exceeds " + std::to_string(max_size));
    for (auto [a, b] : relations_) {
      if (a < 1 || a > size || b < 1 || b > size)
        throw DomainError("POP relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      below_[static_cast<std::size_t>(a)] |= bit(b);
    }
    // Warshall closure over the bitsets.
    for (int m = 1; m <= size_; ++m)
      for (int a = 1; a <= size_; ++a)
        if (below_[static_cast<std::size_t>(a)] & bit(m)) below_[static_cast<std::size_t>(a)] |= below_[static_cast<std::size_t>(m)];
    for (int a = 1; a <= size_; ++a)
      if (below_[static_cast<std::size_t>(a)] & bit(a)) throw DomainError("POP relations contain a cycle");
  }

  /// The chain poset of a classical pattern.
  static PopPattern chain(const Permutation& pattern) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= pattern.size(); ++i)
      for (int j = 1; j <= pattern.size(); ++j)
        if (pattern[i] < pattern[j]) rel.emplace_back(i, j);
    return PopPattern(pattern.size(), std::move(rel));
  }

  int size() const { return size_; }
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }

  /// True when a < b in the transitive closure.
  bool less(int a, int b) const { return (below_[static_cast<std::size_t>(a)] & bit(b)) != 0; }

  friend bool operator==(const PopPattern& a, const PopPattern& b) {
    return a.size_ == b.size_ && a.below_ == b.below_;
  }

private:
  static std::uint32_t bit(int label) { return std::uint32_t{1} << label; }

  int size_;
  std::vector<std::pair<int, int>> relations_;
  std::vector<std::uint32_t> below_;
};

/// P_k: label k above each of 1..k-1, which are mutually incomparable.
inline PopPattern flat_pop(int k) {
  if (k < 1) throw DomainError("flat_pop needs k >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < k; ++i) rel.emplace_back(i, k);
  return PopPattern(k, std::move(rel));
}

namespace detail {

// Extends a partial occurrence; returns the number of completions found, or
// stops after the first one when first_only is set.
inline std::uint64_t extend_occurrence(const Permutation& p, const PopPattern& pat, std::vector<int>& chosen,
                                       int next_index, bool first_only) {
  const int label = static_cast<int>(chosen.size()) + 1;
  if (label > pat.size()) return 1;
  const int remaining = pat.size() - label;
  std::uint64_t total = 0;
  for (int i = next_index; i <= p.size() - remaining; ++i) {
    const int value = p[i];
    bool ok = true;
    for (int j = 1; j < label && ok; ++j) {
      const int earlier = p[chosen[static_cast<std::size_t>(j - 1)]];
      if (pat.less(j, label) && !(earlier < value)) ok = false;
      if (pat.less(label, j) && !(value < earlier)) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(i);
    total += extend_occurrence(p, pat, chosen, i + 1, first_only);
    chosen.pop_back();
    if (first_only && total > 0) return total;
  }
  return total;
}

}  // namespace detail

/// Number of index subsequences of p forming an occurrence of pat.
inline std::uint64_t count_pop_occurrences(const Permutation& p, const PopPattern& pat) {
  if (p.size() < pat.size()) return 0;
  std::vector<int> chosen;
  return detail::extend_occurrence(p, pat, chosen, 1, false);
}

inline bool avoids_pop(const Permutation& p, const PopPattern& pat) {
  if (p.size() < pat.size()) return true;
  std::vector<int> chosen;
  return detail::extend_occurrence(p, pat, chosen, 1, true) == 0;
}

inline bool avoids(const Permutation& p, const Permutation& classical) {
  return avoids_pop(p, PopPattern::chain(classical));
}

}  // namespace popdist
