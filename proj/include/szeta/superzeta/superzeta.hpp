#pragma once

#include <string>
#include <variant>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/mp/real.hpp"
#include "szeta/zeros/zeros.hpp"

// Superzeta functions over the Riemann zeros rho = 1/2 +- i tau_k:
//   Z_A(s|t) = sum_rho (1/2 + t - rho)^{-s}
//   Z_B(s|t) = sum_k (tau_k^2 + t^2)^{-s}
//   Z_C(s|tau) = sum_k (tau_k + tau)^{-s}
// and the partner over the trivial zeros Z_S(s|t) = 2^{-s} zeta(s, 5/4 + t/2).

namespace szeta::superzeta {

using mp::Complex;
using mp::Estimate;
using mp::PrecisionContext;
using mp::Rational;
using mp::Real;

enum class Family { ZA, ZB, ZC, ZS, hurwitz };
// numeric_closed_form: a transcendental closed form evaluated at working precision
enum class Method {
  table_closed_form,
  xi_derivative,
  zba_conversion,
  z1e_confluence,
  continuation,
  zero_sum,
  numeric_closed_form
};

[[nodiscard]] std::string to_string(Family f);
[[nodiscard]] std::string to_string(Method m);

/// Which quantity of the family at the argument a table row holds.
enum class Quantity { value, deriv0, finite_part };
[[nodiscard]] std::string to_string(Quantity q);

struct SpecialValue {
  Family family = Family::ZA;
  Quantity quantity = Quantity::value;
  long argument = 0;
  std::variant<Rational, Real> shift;
  std::variant<Rational, Complex> payload;
  Method method = Method::table_closed_form;
  Real error;  // 0 for exact payloads

  [[nodiscard]] bool exact() const { return std::holds_alternative<Rational>(payload); }
  /// "p/q" for exact payloads, otherwise a decimal with `digits` significant digits.
  [[nodiscard]] std::string payload_string(int digits) const;
  [[nodiscard]] std::string shift_string(int digits) const;
};

// --- first kind ----------------------------------------------------------

/// Z_A(-n|t) for n >= 0, exact.
[[nodiscard]] Rational za_rational(long n, const Rational& t);
/// Same closed form at a real shift.
[[nodiscard]] Real za_negative(long n, const Real& t);
/// d/ds Z_A(s|t) at s = 0 = -(1/2) log(2pi) t + (1/4) log(8pi) - log Xi(1/2 + t).
[[nodiscard]] Estimate<Real> za_deriv0(const Real& t, const PrecisionContext& ctx);
/// log[2^{11/4} pi^{1/2} / (Gamma(1/4) |zeta(1/2)|)], the t = 0 value in closed form.
[[nodiscard]] Estimate<Real> za_deriv0_at_zero_closed(const PrecisionContext& ctx);
/// Z_A(n|t) = (-1)^{n-1}/(n-1)! (log Xi)^{(n)}(1/2 + t), n >= 1.
[[nodiscard]] Estimate<Real> za_positive(long n, const Real& t, const PrecisionContext& ctx);
/// Z_A(1|t), ..., Z_A(N|t) from a single Taylor series.
[[nodiscard]] std::vector<Estimate<Real>> za_positive_range(long N, const Real& t, const PrecisionContext& ctx);
/// Finite part at s = 1: (1/2) log 2pi + (log Xi)'(1/2 + t).
[[nodiscard]] Estimate<Real> za_fp1(const Real& t, const PrecisionContext& ctx);

// --- trivial-zero partner ------------------------------------------------

[[nodiscard]] Estimate<Complex> zs_trivial(const Complex& s, const Real& t, const PrecisionContext& ctx);
/// Z_S(-n|t) = -2^n B_{n+1}(5/4 + t/2)/(n+1), exact.
[[nodiscard]] Rational zs_trivial_rational(long n, const Rational& t);

// --- continuation --------------------------------------------------------

/// J(s|t) = int_0^inf (zeta'/zeta)(1/2 + t + y) y^{-s} dy, Re s < 1, t > 1/2.
[[nodiscard]] Estimate<Complex> j_mellin(const Complex& s, const Real& t, const PrecisionContext& ctx);
/// Z_A(s|t) = -Z_S(s|t) + (t - 1/2)^{-s} + (sin(pi s)/pi) J(s|t), Re s < 1, s not an integer.
[[nodiscard]] Estimate<Complex> za_continuation(const Complex& s, const Real& t, const PrecisionContext& ctx);
/// Limit of the continuation at an integer k <= 0 from symmetric real offsets, extrapolated.
[[nodiscard]] Estimate<Real> za_continuation_limit(long k, const Real& t, const PrecisionContext& ctx);

// --- second kind ---------------------------------------------------------

/// Z_B(-m|t) for m >= 0, exact.
[[nodiscard]] Rational zb_rational(long m, const Rational& t);
/// Z_B(m|t), m >= 1; picks the route from t (see zb_positive_method).
[[nodiscard]] Estimate<Real> zb_positive(long m, const Real& t, const PrecisionContext& ctx);
[[nodiscard]] Method zb_positive_method(const Real& t);
/// Z_B(m|t) = sum_{n=1}^m C(2m-n-1, m-1) (2t)^{n-2m} Z_A(n|t), t != 0.
[[nodiscard]] Estimate<Real> zb_positive_zba(long m, const Real& t, const PrecisionContext& ctx);
/// Z_B_0(m) = (1/2)(-1)^m Z_A_0(2m).
[[nodiscard]] Estimate<Real> zb_positive_z1e(long m, const PrecisionContext& ctx);
/// (-1)^{m-1}/(m-1)! d^m/d(t^2)^m log Xi(1/2 + t), by re-expanding the Taylor series in t^2.
[[nodiscard]] Estimate<Real> zb_positive_t2(long m, const Real& t, const PrecisionContext& ctx);
/// d/dsigma Z_B(sigma|t) at 0 = (1/4) log(8pi) - log Xi(1/2 + t).
[[nodiscard]] Estimate<Real> zb_deriv0(const Real& t, const PrecisionContext& ctx);

struct PoleFit {
  Real a, b, c;          // a eps^-2 + b eps^-1 + c
  Real a_error, b_error; // from the scatter of the fit and the summation errors
};
/// Least-squares fit of Z_B(1/2 + eps | t) over the given eps (at least 4 distinct values).
[[nodiscard]] PoleFit zb_pole_probe(const std::vector<Real>& eps, const zeros::ZeroSet& set, const Real& t,
                                    const PrecisionContext& ctx);

// --- third kind ----------------------------------------------------------

/// Direct series of Z_C(s|tau), Re s > 1, with the density tail when the set is certified.
[[nodiscard]] Estimate<Complex> zc_values(const Complex& s, const Real& tau, const zeros::ZeroSet& set,
                                          const PrecisionContext& ctx);
/// Finite part of Z_C(s|tau) at s = 0: 7/8 + (log 2pi / 2pi) tau.
[[nodiscard]] Real zc_fp0(const Real& tau);

// --- tables --------------------------------------------------------------

/// Table column for integer arguments smin..smax at shift t.  Rows the family
/// cannot produce (Z_C at s = 1, Z_C at s >= 2 without zeros) are skipped.
[[nodiscard]] std::vector<SpecialValue> table_column(Family family, const Rational& t, long smin, long smax,
                                                     const PrecisionContext& ctx,
                                                     const zeros::ZeroSet* set = nullptr);

}  // namespace szeta::superzeta
