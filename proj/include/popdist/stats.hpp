#pragma once

#include <array>
#include <ostream>

#include "permutation.hpp"

namespace popdist {

/// The six classical statistics of a permutation.
struct StatVector {
  int asc = 0;
  int des = 0;
  int lrmax = 0;
  int rlmax = 0;
  int lrmin = 0;
  int rlmin = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const StatVector& s) {
    return os << "(asc=" << s.asc << ", des=" << s.des << ", lrmax=" << s.lrmax << ", rlmax=" << s.rlmax
              << ", lrmin=" << s.lrmin << ", rlmin=" << s.rlmin << ")";
  }
};

inline StatVector stat_vector(const Permutation& p) {
  StatVector s;
  const int n = p.size();
  for (int i = 1; i < n; ++i) (p[i] < p[i + 1] ? s.asc : s.des)++;
  int hi = 0, lo = n + 1;
  for (int i = 1; i <= n; ++i) {
    if (p[i] > hi) ++s.lrmax, hi = p[i];
    if (p[i] < lo) ++s.lrmin, lo = p[i];
  }
  hi = 0, lo = n + 1;
  for (int i = n; i >= 1; --i) {
    if (p[i] > hi) ++s.rlmax, hi = p[i];
    if (p[i] < lo) ++s.rlmin, lo = p[i];
  }
  return s;
}

/// Exponents of p, q, u, v, s, t in p^asc q^des u^lrmax v^rlmax s^lrmin t^rlmin.
using StatExponents = std::array<int, 6>;

inline StatExponents monomial(const Permutation& p) {
  const auto s = stat_vector(p);
  return {s.asc, s.des, s.lrmax, s.rlmax, s.lrmin, s.rlmin};
}

}  // namespace popdist
