#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <gmpxx.h>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "config.hpp"

namespace popdist {

/// The seven symbols. x marks length; the rest track asc, des, lrmax,
/// rlmax, lrmin, rlmin in that order.
enum class Var : int { x = 0, p, q, u, v, s, t };

inline constexpr int num_vars = 7;
inline constexpr std::array<Var, num_vars> all_vars{Var::x, Var::p, Var::q, Var::u, Var::v, Var::s, Var::t};
inline constexpr std::array<char, num_vars> var_names{'x', 'p', 'q', 'u', 'v', 's', 't'};

using Exponents = std::array<int, num_vars>;

/// A monomial x^a p^b ... t^g packed one byte per variable, x in the top
/// byte, so integer order on the key is lexicographic order on
/// (e_x, e_p, e_q, e_u, e_v, e_s, e_t) and multiplication is key addition.
class Monomial {
public:
  static constexpr int max_exponent = 127;

  constexpr Monomial() = default;

  explicit Monomial(const Exponents& e) {
    for (int i = 0; i < num_vars; ++i) {
      if (e[static_cast<std::size_t>(i)] < 0 || e[static_cast<std::size_t>(i)] > max_exponent)
        throw LimitError("monomial exponent out of range");
      key_ |= static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]) << shift(i);
    }
  }

  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  static Monomial of(Var v, int power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = power;
    return Monomial(e);
  }

  constexpr std::uint64_t key() const { return key_; }

  constexpr int operator[](Var v) const { return static_cast<int>((key_ >> shift(static_cast<int>(v))) & 0xff); }
  constexpr int x_degree() const { return (*this)[Var::x]; }

  Exponents exponents() const {
    Exponents e{};
    for (int i = 0; i < num_vars; ++i) e[static_cast<std::size_t>(i)] = (*this)[static_cast<Var>(i)];
    return e;
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    const std::uint64_t k = a.key_ + b.key_;
    if (k & high_bits) throw LimitError("monomial exponent overflow");
    return from_key(k);
  }

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

  static constexpr int shift(int var_index) { return 8 * (num_vars - 1 - var_index); }
  static constexpr std::uint64_t var_mask(Var v) { return std::uint64_t{0xff} << shift(static_cast<int>(v)); }

private:
  // Exponents stay below 128, so a set high bit after addition is overflow.
  static constexpr std::uint64_t high_bits = 0x0080808080808080ULL;
  std::uint64_t key_ = 0;
};

inline std::string to_string(Monomial m) {
  std::string out;
  for (int i = 1; i <= num_vars; ++i) {
    // Display order p q u v s t x reads like the paper's monomials.
    const Var v = static_cast<Var>(i % num_vars);
    const int e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_names[static_cast<std::size_t>(v)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

struct Term {
  Monomial mono;
  mpq_class coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Bit mask selecting variables; used for specialization to 1.
using VarSet = std::initializer_list<Var>;

namespace detail {

using Terms = std::vector<Term>;

inline std::uint64_t mask_of(VarSet vars) {
  std::uint64_t mask = 0;
  for (Var v : vars) mask |= Monomial::var_mask(v);
  return mask;
}

inline Terms canonicalize(std::unordered_map<std::uint64_t, mpq_class>&& acc) {
  Terms out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (sgn(c) != 0) out.push_back({Monomial::from_key(key), std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return out;
}

inline Terms add(const Terms& a, const Terms& b, int sign) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono < j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono < i->mono) {
      out.push_back({j->mono, sign > 0 ? j->coeff : mpq_class(-j->coeff)});
      ++j;
    } else {
      mpq_class c = sign > 0 ? mpq_class(i->coeff + j->coeff) : mpq_class(i->coeff - j->coeff);
      if (sgn(c) != 0) out.push_back({i->mono, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

/// Product keeping only terms of x-degree <= max_x.
inline Terms multiply(const Terms& a, const Terms& b, int max_x) {
  if (a.empty() || b.empty()) return {};
  const Terms& outer = a.size() <= b.size() ? a : b;
  const Terms& inner = a.size() <= b.size() ? b : a;
  std::unordered_map<std::uint64_t, mpq_class> acc;
  acc.reserve(outer.size() * 4 + inner.size());
  mpq_class prod;
  for (const auto& ta : outer) {
    const int room = max_x - ta.mono.x_degree();
    if (room < 0) break;
    const std::uint64_t limit =
        room >= Monomial::max_exponent ? UINT64_MAX : (static_cast<std::uint64_t>(room) + 1) << Monomial::shift(0);
    for (const auto& tb : inner) {
      if (tb.mono.key() >= limit) break;
      prod = ta.coeff * tb.coeff;
      acc[(ta.mono * tb.mono).key()] += prod;
    }
  }
  return canonicalize(std::move(acc));
}

inline Terms specialize(const Terms& a, std::uint64_t mask) {
  if (mask == 0) return a;
  std::unordered_map<std::uint64_t, mpq_class> acc;
  acc.reserve(a.size());
  for (const auto& t : a) acc[t.mono.key() & ~mask] += t.coeff;
  return canonicalize(std::move(acc));
}

inline Terms swap_vars(const Terms& a, Var v1, Var v2) {
  std::unordered_map<std::uint64_t, mpq_class> acc;
  acc.reserve(a.size());
  const int s1 = Monomial::shift(static_cast<int>(v1)), s2 = Monomial::shift(static_cast<int>(v2));
  for (const auto& t : a) {
    const std::uint64_t k = t.mono.key();
    const std::uint64_t e1 = (k >> s1) & 0xff, e2 = (k >> s2) & 0xff;
    const std::uint64_t rest = k & ~(Monomial::var_mask(v1) | Monomial::var_mask(v2));
    acc[rest | (e1 << s2) | (e2 << s1)] += t.coeff;
  }
  return canonicalize(std::move(acc));
}

inline Terms scale(const Terms& a, const mpq_class& c) {
  if (sgn(c) == 0) return {};
  Terms out = a;
  for (auto& t : out) t.coeff *= c;
  return out;
}

inline mpq_class coeff(const Terms& a, Monomial m) {
  auto it = std::lower_bound(a.begin(), a.end(), m, [](const Term& t, Monomial k) { return t.mono < k; });
  return it != a.end() && it->mono == m ? it->coeff : mpq_class(0);
}

inline void print(std::ostream& os, const Terms& terms) {
  if (terms.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    const mpq_class mag = abs(t.coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit_mono = t.mono.key() == 0;
    if (mag != 1 || unit_mono) {
      os << mag.get_str();
      if (!unit_mono) os << '*';
    }
    if (!unit_mono) os << to_string(t.mono);
  }
}

}  // namespace detail

class TruncSeries;

/// A finite multivariate polynomial over the rationals.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(mpq_class(c)) {}
  Polynomial(const mpq_class& c) : Polynomial(Monomial{}, c) {}
  Polynomial(Monomial m, const mpq_class& c = 1) {
    if (sgn(c) == 0) return;
    terms_.push_back({m, c});
    terms_.back().coeff.canonicalize();
  }

  static Polynomial var(Var v) { return Polynomial(Monomial::of(v)); }

  static Polynomial from_terms(detail::Terms terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  std::span<const Term> terms() const { return terms_; }
  const detail::Terms& raw_terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(Monomial m) const { return detail::coeff(terms_, m); }

  /// Nonzero constant when the polynomial has only the unit monomial.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.key() == 0); }
  mpq_class constant_term() const { return coeff(Monomial{}); }

  int max_x_degree() const { return terms_.empty() ? -1 : terms_.back().mono.x_degree(); }

  Polynomial specialize(VarSet to_one) const { return from_terms(detail::specialize(terms_, detail::mask_of(to_one))); }
  Polynomial swap_vars(Var a, Var b) const { return from_terms(detail::swap_vars(terms_, a, b)); }

  /// The coefficient of x^n as a polynomial in the remaining variables.
  Polynomial x_slice(int n) const {
    detail::Terms out;
    for (const auto& t : terms_)
      if (t.mono.x_degree() == n) out.push_back({Monomial::from_key(t.mono.key() & ~Monomial::var_mask(Var::x)), t.coeff});
    return from_terms(std::move(out));
  }

  Polynomial pow(int e) const {
    Polynomial r(1L);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  TruncSeries truncate(int order) const;

  Polynomial operator-() const { return from_terms(detail::scale(terms_, -1)); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return from_terms(detail::add(a.terms_, b.terms_, 1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return from_terms(detail::add(a.terms_, b.terms_, -1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return from_terms(detail::multiply(a.terms_, b.terms_, INT_MAX));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    std::ostringstream os;
    detail::print(os, terms_);
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    detail::print(os, p.terms_);
    return os;
  }

private:
  detail::Terms terms_;
};

namespace vars {
inline Polynomial x() { return Polynomial::var(Var::x); }
inline Polynomial p() { return Polynomial::var(Var::p); }
inline Polynomial q() { return Polynomial::var(Var::q); }
inline Polynomial u() { return Polynomial::var(Var::u); }
inline Polynomial v() { return Polynomial::var(Var::v); }
inline Polynomial s() { return Polynomial::var(Var::s); }
inline Polynomial t() { return Polynomial::var(Var::t); }
}  // namespace vars

/// A power series in x, truncated after x^order, with polynomial coefficients
/// in p, q, u, v, s, t over the rationals. Zero coefficients are never stored.
/// Arithmetic between different orders is an error.
class TruncSeries {
public:
  static constexpr int max_order = 100;

  explicit TruncSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("truncation order must be non-negative");
    if (order > max_order) throw LimitError("truncation order " + std::to_string(order) + " exceeds " + std::to_string(max_order));
  }

  TruncSeries(int order, const Polynomial& p) : TruncSeries(order) {
    for (const auto& t : p.terms())
      if (t.mono.x_degree() <= order) terms_.push_back(t);
  }

  static TruncSeries one(int order) { return TruncSeries(order, Polynomial(1L)); }

  /// Sum of x^n * slices[n]; slices must not mention x.
  static TruncSeries from_slices(int order, std::span<const Polynomial> slices) {
    TruncSeries out(order);
    const auto xm = Monomial::of(Var::x);
    Monomial xn{};
    for (std::size_t n = 0; n < slices.size() && static_cast<int>(n) <= order; ++n) {
      for (const auto& t : slices[n].terms()) {
        if (t.mono[Var::x] != 0) throw DomainError("series slice mentions x");
        out.terms_.push_back({t.mono * xn, t.coeff});
      }
      xn = xn * xm;
    }
    std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return out;
  }

  int order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(Monomial m) const { return detail::coeff(terms_, m); }
  mpq_class coeff(const Exponents& e) const { return coeff(Monomial(e)); }

  Polynomial x_slice(int n) const {
    detail::Terms out;
    const std::uint64_t lo = static_cast<std::uint64_t>(n) << Monomial::shift(0);
    const std::uint64_t hi = static_cast<std::uint64_t>(n + 1) << Monomial::shift(0);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), lo, [](const Term& t, std::uint64_t k) { return t.mono.key() < k; });
    for (; it != terms_.end() && it->mono.key() < hi; ++it) out.push_back({Monomial::from_key(it->mono.key() - lo), it->coeff});
    return Polynomial::from_terms(std::move(out));
  }

  std::vector<Polynomial> slices() const {
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(order_) + 1);
    for (int n = 0; n <= order_; ++n) out.push_back(x_slice(n));
    return out;
  }

  /// Lowest x-degree carrying a term, or -1 for the zero series.
  int valuation() const { return terms_.empty() ? -1 : terms_.front().mono.x_degree(); }

  Polynomial to_polynomial() const { return Polynomial::from_terms(terms_); }

  TruncSeries truncate(int order) const {
    if (order > order_) throw DomainError("cannot raise truncation order from " + std::to_string(order_) + " to " + std::to_string(order));
    return TruncSeries(order, to_polynomial());
  }

  /// Sets the listed variables to 1, summing collapsed coefficients.
  TruncSeries specialize(VarSet to_one) const {
    for (Var v : to_one)
      if (v == Var::x) throw DomainError("x cannot be specialized in a truncated series");
    return with_terms(detail::specialize(terms_, detail::mask_of(to_one)));
  }

  TruncSeries swap_vars(Var a, Var b) const {
    if (a == Var::x || b == Var::x) throw DomainError("x cannot be renamed in a truncated series");
    return with_terms(detail::swap_vars(terms_, a, b));
  }

  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
  }

  bool has_nonnegative_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1 && sgn(t.coeff) > 0; });
  }

  TruncSeries operator-() const { return with_terms(detail::scale(terms_, -1)); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    return a.with_terms(detail::add(a.terms_, b.terms_, 1));
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    return a.with_terms(detail::add(a.terms_, b.terms_, -1));
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    return a.with_terms(detail::multiply(a.terms_, b.terms_, a.order_));
  }

  /// Multiplication by a polynomial truncates the product to this order.
  friend TruncSeries operator*(const Polynomial& a, const TruncSeries& b) {
    return b.with_terms(detail::multiply(a.raw_terms(), b.terms_, b.order_));
  }
  friend TruncSeries operator*(const TruncSeries& a, const Polynomial& b) { return b * a; }
  friend TruncSeries operator+(const TruncSeries& a, const Polynomial& b) { return a + TruncSeries(a.order_, b); }
  friend TruncSeries operator+(const Polynomial& a, const TruncSeries& b) { return TruncSeries(b.order_, a) + b; }
  friend TruncSeries operator-(const TruncSeries& a, const Polynomial& b) { return a - TruncSeries(a.order_, b); }
  friend TruncSeries operator-(const Polynomial& a, const TruncSeries& b) { return TruncSeries(b.order_, a) - b; }

  TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
  TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
  TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    detail::print(os, s.terms_);
    return os << " + O(x^" << s.order_ + 1 << ")";
  }

private:
  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_)
      throw DomainError("truncation order mismatch: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
  }

  TruncSeries with_terms(detail::Terms terms) const {
    TruncSeries out(order_);
    out.terms_ = std::move(terms);
    return out;
  }

  int order_;
  detail::Terms terms_;
};

inline TruncSeries Polynomial::truncate(int order) const { return TruncSeries(order, *this); }

/// The first term where two series differ, for diagnostics.
struct SeriesDiff {
  Monomial mono;
  mpq_class lhs, rhs;
};

inline std::optional<SeriesDiff> first_difference(const TruncSeries& a, const TruncSeries& b) {
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->mono < j->mono)) return SeriesDiff{i->mono, i->coeff, 0};
    if (i == a.terms().end() || j->mono < i->mono) return SeriesDiff{j->mono, 0, j->coeff};
    if (i->coeff != j->coeff) return SeriesDiff{i->mono, i->coeff, j->coeff};
    ++i, ++j;
  }
  return std::nullopt;
}

/// num / den in the truncated ring. If den has x-valuation d > 0, num must
/// vanish below x^d and the quotient loses d orders of precision. The leading
/// x-slice of den must be a nonzero rational constant.
inline TruncSeries divide(const TruncSeries& num, const TruncSeries& den) {
  if (num.order() != den.order()) throw DomainError("truncation order mismatch in division");
  const int shift = den.valuation();
  if (shift < 0) throw DomainError("division by the zero series");
  const auto lead = den.x_slice(shift);
  if (!lead.is_constant()) throw DomainError("leading coefficient of the divisor is not a rational constant");
  if (num.valuation() >= 0 && num.valuation() < shift) throw DomainError("dividend vanishes to lower order than the divisor");
  const int order = num.order() - shift;
  if (order < 0) throw DomainError("division leaves no precision");
  const mpq_class inv_lead = 1 / lead.constant_term();

  std::vector<Polynomial> n_sl, d_sl, out;
  for (int k = 0; k <= order; ++k) {
    n_sl.push_back(num.x_slice(k + shift));
    d_sl.push_back(den.x_slice(k + shift));
  }
  for (int k = 0; k <= order; ++k) {
    Polynomial acc = n_sl[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j)
      if (!d_sl[static_cast<std::size_t>(j)].is_zero())
        acc -= d_sl[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out.push_back(acc * Polynomial(inv_lead));
  }
  return TruncSeries::from_slices(order, out);
}

/// Square root with positive constant term. The x^0 slice must be the square
/// of a nonzero rational.
inline TruncSeries sqrt(const TruncSeries& s) {
  const auto c0 = s.x_slice(0);
  if (!c0.is_constant() || sgn(c0.constant_term()) <= 0) throw DomainError("series square root needs a positive rational constant term");
  const mpq_class c = c0.constant_term();
  mpz_class rn, rd;
  mpz_sqrtrem(rn.get_mpz_t(), mpz_class().get_mpz_t(), c.get_num().get_mpz_t());
  mpz_sqrtrem(rd.get_mpz_t(), mpz_class().get_mpz_t(), c.get_den().get_mpz_t());
  if (rn * rn != c.get_num() || rd * rd != c.get_den()) throw DomainError("constant term " + c.get_str() + " is not a rational square");
  const mpq_class r0(rn, rd);
  const mpq_class inv_two_r0 = 1 / (2 * r0);

  std::vector<Polynomial> out{Polynomial(r0)};
  for (int k = 1; k <= s.order(); ++k) {
    Polynomial acc = s.x_slice(k);
    for (int j = 1; j < k; ++j) acc -= out[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out.push_back(acc * Polynomial(inv_two_r0));
  }
  return TruncSeries::from_slices(s.order(), out);
}

/// numerator / denominator with finite polynomial parts.
struct RationalGF {
  Polynomial numerator;
  Polynomial denominator;

  /// The unique T with denominator * T = numerator mod x^(order+1).
  TruncSeries expand(int order) const {
    const auto c0 = denominator.x_slice(0);
    if (!c0.is_constant() || c0.is_zero()) throw DomainError("denominator constant term must be a nonzero rational");
    return divide(numerator.truncate(order), denominator.truncate(order));
  }

  RationalGF specialize(VarSet to_one) const { return {numerator.specialize(to_one), denominator.specialize(to_one)}; }
  RationalGF swap_vars(Var a, Var b) const { return {numerator.swap_vars(a, b), denominator.swap_vars(a, b)}; }

  /// Equality as rational functions: n1 * d2 == n2 * d1.
  friend bool equivalent(const RationalGF& a, const RationalGF& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

/// a + b * F for a series F not yet known.
struct AffineSeries {
  TruncSeries a;
  TruncSeries b;

  static AffineSeries known(const TruncSeries& value) { return {value, TruncSeries(value.order())}; }
  static AffineSeries unknown(int order) { return {TruncSeries(order), TruncSeries::one(order)}; }

  int order() const { return a.order(); }

  /// The expression with F replaced by a concrete series.
  TruncSeries evaluate(const TruncSeries& f) const { return a + b * f; }

  friend AffineSeries operator+(const AffineSeries& l, const AffineSeries& r) { return {l.a + r.a, l.b + r.b}; }
  friend AffineSeries operator-(const AffineSeries& l, const AffineSeries& r) { return {l.a - r.a, l.b - r.b}; }
  friend AffineSeries operator*(const TruncSeries& k, const AffineSeries& r) { return {k * r.a, k * r.b}; }
  friend AffineSeries operator*(const Polynomial& k, const AffineSeries& r) { return {k * r.a, k * r.b}; }
  AffineSeries& operator+=(const AffineSeries& r) { return *this = *this + r; }
};

/// The unique F with F = a + b F, i.e. a / (1 - b); b must have no x^0 part.
inline TruncSeries solve_affine(const AffineSeries& aff) {
  if (aff.a.order() != aff.b.order()) throw DomainError("affine parts have different truncation orders");
  if (!aff.b.x_slice(0).is_zero()) throw DomainError("affine coefficient has a nonzero constant term; no unique fixed point");
  return divide(aff.a, TruncSeries::one(aff.order()) - aff.b);
}

}  // namespace popdist
