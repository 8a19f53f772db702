#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "series.hpp"

namespace popdist {

/// Closed-form generating functions addressable by name.
enum class ClosedFormId {
  F2,
  F3,
  F4,
  F3_counting,
  F4_counting,
  F3_xv,
  F3_xu,
  F3_xt,
  F4_xu,
  F4_xt,
  Lmax_separable,
  S_tpq,
};

inline constexpr std::array<std::pair<ClosedFormId, std::string_view>, 12> closed_form_names{{
    {ClosedFormId::F2, "F2"},
    {ClosedFormId::F3, "F3"},
    {ClosedFormId::F4, "F4"},
    {ClosedFormId::F3_counting, "F3_counting"},
    {ClosedFormId::F4_counting, "F4_counting"},
    {ClosedFormId::F3_xv, "F3_xv"},
    {ClosedFormId::F3_xu, "F3_xu"},
    {ClosedFormId::F3_xt, "F3_xt"},
    {ClosedFormId::F4_xu, "F4_xu"},
    {ClosedFormId::F4_xt, "F4_xt"},
    {ClosedFormId::Lmax_separable, "Lmax_separable"},
    {ClosedFormId::S_tpq, "S_tpq"},
}};

inline std::string_view name_of(ClosedFormId id) {
  for (auto [k, name] : closed_form_names)
    if (k == id) return name;
  throw std::logic_error("unnamed closed form");
}

inline std::optional<ClosedFormId> parse_closed_form_id(std::string_view name) {
  for (auto [k, n] : closed_form_names)
    if (n == name) return k;
  return std::nullopt;
}

/// True for the ids that have a rational closed form.
inline bool is_rational(ClosedFormId id) { return id != ClosedFormId::Lmax_separable && id != ClosedFormId::S_tpq; }

/// F_2 = 1 + uvstx / (1 - qvsx).
inline RationalGF f2_gf() {
  using namespace vars;
  const Polynomial qvsx = q() * v() * s() * x();
  return {1 - qvsx + u() * v() * s() * t() * x(), 1 - qvsx};
}

/// F_3 over S_n(2413, 3142, P_3) = S_n(123, 213), all six statistics.
inline RationalGF f3_gf() {
  using namespace vars;
  const auto X = x(), P = p(), Q = q(), U = u(), V = v(), S = s(), T = t();
  const Polynomial num = 1 + Q * Q * V * V * S * X * X + V * T * U * S * X * (1 + P * T * U * X) -
                         Q * V * X * (1 + P * U * S * S * X * X * V * T * (-1 + T) * (-1 + U) + S * (1 + P * X + V * T * U * X));
  const Polynomial den = 1 + Q * Q * V * V * S * X * X - Q * V * X * (1 + S + P * S * X);
  return {num, den};
}

/// Denominator of F_4; 19 monomials once expanded.
inline Polynomial f4_denominator() {
  using namespace vars;
  const auto x_ = x(), p_ = p(), q_ = q(), v_ = v(), s_ = s();
  return 1 + q_.pow(4) * s_ * v_.pow(3) * x_.pow(4) * (v_ - p_ * s_ * x_) -
         q_ * v_ * x_ * (3 + s_ + p_ * x_ + p_ * s_ * x_ + p_.pow(2) * s_ * x_.pow(2)) -
         q_.pow(3) * v_.pow(2) * x_.pow(3) * (v_ - p_ * s_.pow(2) * x_ * (2 + p_ * x_) + s_ * v_ * (3 + 2 * p_ * x_)) +
         q_.pow(2) * v_ * x_.pow(2) *
             (-p_ * s_.pow(2) * x_ + v_ * (3 + p_ * x_ + s_ * (3 + 3 * p_ * x_ + p_.pow(2) * x_.pow(2))));
}

/// Numerator of F_4; 100 monomials once expanded.
inline Polynomial f4_numerator() {
  using namespace vars;
  const auto x_ = x(), p_ = p(), q_ = q(), u_ = u(), v_ = v(), s_ = s(), t_ = t();
  const Polynomial tm1 = -1 + t_, um1 = -1 + u_;
  const Polynomial tu = t_ * u_;

  const Polynomial quartic =
      q_.pow(4) * s_ * v_.pow(3) * x_.pow(4) *
      (v_ - p_ * s_ * x_ + p_ * s_.pow(2) * tu * (-1 + t_ + u_ - tu) * v_ * x_.pow(2));

  const Polynomial linear = s_ * tu * v_ * x_ * (1 + p_ * tu * x_ + p_.pow(2) * t_.pow(2) * u_.pow(2) * x_.pow(2));

  const Polynomial quadratic =
      q_.pow(2) * v_ * x_.pow(2) *
      (-p_ * s_.pow(2) * x_ +
       s_ * tu * v_.pow(2) * x_ *
           (3 + p_ * (1 + 2 * s_ * tm1 * um1 + tu) * x_ +
            p_.pow(2) * tm1 * um1 * (tu + s_ * (1 + t_ + u_ + 2 * tu)) * x_.pow(2) +
            p_.pow(3) * s_ * tm1 * t_ * um1 * u_ * x_.pow(3)) +
       v_ * (3 + p_ * x_ - p_ * s_.pow(2) * t_.pow(2) * u_.pow(2) * x_.pow(2) * (2 + p_ * x_) +
             s_ * (3 + 3 * p_ * x_ + p_.pow(2) * x_.pow(2)) -
             p_ * s_.pow(3) * tm1 * t_ * um1 * u_ * x_.pow(2) * (1 + p_.pow(2) * tu * x_.pow(2))));

  const Polynomial cubic =
      q_.pow(3) * v_.pow(2) * x_.pow(3) *
      (-p_ * s_.pow(2) * x_ * (2 + p_ * x_) +
       s_ * tu * v_.pow(2) * x_ * (1 + p_ * s_ * tm1 * um1 * x_ + p_.pow(2) * s_ * tm1 * t_ * um1 * u_ * x_.pow(2)) +
       v_ * (1 - p_ * s_.pow(2) * t_.pow(2) * u_.pow(2) * x_.pow(2) + s_ * (3 + 2 * p_ * x_) -
             p_ * s_.pow(3) * tm1 * t_ * um1 * u_ * x_.pow(2) * (2 + p_ * x_ + p_.pow(2) * tu * x_.pow(2))));

  const Polynomial first =
      q_ * v_ * x_ *
      (3 + p_ * x_ +
       s_ * (1 + 3 * tu * v_ * x_ + p_ * x_ * (1 + tu * v_ * x_ + 2 * t_.pow(2) * u_.pow(2) * v_ * x_) +
             p_.pow(2) * x_.pow(2) *
                 (1 - t_.pow(2) * um1 * u_.pow(2) * v_ * x_ + t_.pow(3) * u_.pow(2) * (-1 + 2 * u_) * v_ * x_)) +
       p_ * s_.pow(2) * tu * x_.pow(2) *
           (p_ * t_.pow(2) * um1 * v_ * x_ * (1 + u_ + p_ * u_ * x_) - um1 * v_ * (1 + p_ * (1 + u_) * x_) -
            t_ * (v_ + p_.pow(2) * u_.pow(2) * v_ * x_.pow(2) - u_ * (-1 + v_ + p_.pow(2) * v_ * x_.pow(2)))));

  return 1 + quartic + linear + quadratic - cubic - first;
}

/// F_4 over S_n(2413, 3142, P_4), all six statistics.
inline RationalGF f4_gf() { return {f4_numerator(), f4_denominator()}; }

/// The displayed single- and two-variable specializations.
inline RationalGF named_specialization(ClosedFormId id) {
  using namespace vars;
  const auto X = x(), U = u(), V = v(), T = t();
  const Polynomial f4_den = 1 - 4 * X + 4 * X.pow(2) - 2 * X.pow(3) + 2 * X.pow(4);
  auto f4_single = [&](const Polynomial& w) -> RationalGF {
    return {1 + (-4 + w) * X + (4 - 3 * w + w.pow(2)) * X.pow(2) + (-2 + 2 * w - w.pow(2) + w.pow(3)) * X.pow(3) -
                (-2 + w.pow(2) + w.pow(3)) * X.pow(4),
            f4_den};
  };
  auto f3_single = [&](const Polynomial& w) -> RationalGF {
    return {1 - 2 * X + w * X - w * X.pow(2) + w.pow(2) * X.pow(2), 1 - 2 * X};
  };
  switch (id) {
    case ClosedFormId::F3_counting:
      return {1 - X, 1 - 2 * X};
    case ClosedFormId::F4_counting:
      return {1 - 3 * X + 2 * X.pow(2), f4_den};
    case ClosedFormId::F3_xv:
      return {1 - V * X, 1 - 2 * V * X - V * X.pow(2) + V.pow(2) * X.pow(2)};
    case ClosedFormId::F3_xu:
      return f3_single(U);
    case ClosedFormId::F3_xt:
      return f3_single(T);
    case ClosedFormId::F4_xu:
      return f4_single(U);
    case ClosedFormId::F4_xt:
      return f4_single(T);
    default:
      throw DomainError("no displayed specialization named " + std::string(name_of(id)));
  }
}

/// Rational closed form for any id except Lmax_separable and S_tpq.
inline RationalGF closed_form(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::F2:
      return f2_gf();
    case ClosedFormId::F3:
      return f3_gf();
    case ClosedFormId::F4:
      return f4_gf();
    case ClosedFormId::Lmax_separable:
    case ClosedFormId::S_tpq:
      throw DomainError(std::string(name_of(id)) + " has no rational closed form");
    default:
      return named_specialization(id);
  }
}

/// Sum over separable permutations of x^n u^lrmax, n >= 1, from the nested
/// square-root closed form. Intermediate quarters cancel; the result is
/// checked to be integral.
inline TruncSeries lmax_separable_series(int order) {
  if (order < 1) throw DomainError("lmax_separable_series needs order >= 1");
  using namespace vars;
  const int work = order + 1;  // the final division drops one order
  const auto X = x().truncate(work), U = u().truncate(work), one = TruncSeries::one(work);
  const mpq_class quarter(1, 4);
  const auto root_d = sqrt((x() * x() - 6 * x() + 1).truncate(work));
  const auto inner_base = Polynomial(-quarter) * root_d - X * U + Polynomial(quarter) * X + Polynomial(mpq_class(5, 4)) * one;
  const auto inner = inner_base * inner_base + root_d - X - one;
  const auto num = Polynomial(4L) * sqrt(inner) - root_d + Polynomial(4L) * X * U + X - Polynomial(3L) * one;
  const auto den = Polynomial(2L) * (root_d - X - one);
  auto result = divide(num, den);
  if (!result.has_integer_coefficients()) throw std::logic_error("lrmax series has non-integer coefficients");
  return result;
}

/// pq S^3 + pq S^2 t + S((p+q)t - 1) + t, with t carried in the x slot.
inline TruncSeries s_tpq_residual(const TruncSeries& S) {
  using namespace vars;
  const Polynomial pq = p() * q();
  const Polynomial tt = x();
  return pq * (S * S * S) + (pq * tt) * (S * S) + ((p() + q()) * tt - 1) * S + tt.truncate(S.order());
}

/// The root S(t,p,q) with S(0) = 0 of the cubic, by the t-adic iteration
/// S <- t + (p+q) t S + pq t S^2 + pq S^3. The expansion variable t is carried
/// in the x slot, so [x^n]S is a polynomial in p and q.
inline TruncSeries s_tpq_series(int order) {
  if (order < 1) throw DomainError("s_tpq_series needs order >= 1");
  using namespace vars;
  const Polynomial pq = p() * q();
  const Polynomial tt = x();
  TruncSeries S(order);
  // Each pass fixes at least one more power of t.
  for (int pass = 0; pass <= order; ++pass) {
    auto next = tt.truncate(order) + ((p() + q()) * tt) * S + (pq * tt) * (S * S) + pq * (S * S * S);
    if (next == S) break;
    S = std::move(next);
  }
  return S;
}

}  // namespace popdist
