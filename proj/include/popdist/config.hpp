#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace popdist {

/// Raised when an argument is outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured desk-scale bound.
class LimitError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Size bounds for enumeration and permutation storage.
struct Limits {
  int max_perm_length = 16;
  int max_separable_n = 12;
  /// Bound on brute-force class enumeration and on the X_n tables.
  int max_enumeration_n = 10;

  /// Defaults, with POPDIST_MAX_N overriding the enumeration bound.
  static Limits from_env() {
    Limits lim;
    if (const char* env = std::getenv("POPDIST_MAX_N"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(env, &used);
      } catch (const std::exception&) {
        throw DomainError(std::string("POPDIST_MAX_N is not an integer: ") + env);
      }
      if (used != std::string(env).size() || value < 0)
        throw DomainError(std::string("POPDIST_MAX_N is not a non-negative integer: ") + env);
      lim.max_enumeration_n = value;
      if (lim.max_separable_n < value) lim.max_separable_n = value;
    }
    return lim;
  }
};

}  // namespace popdist
