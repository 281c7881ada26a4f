#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"
#include "szeta/zeros/zeros.hpp"

// Keiper-Li coefficients lambda_n = sum_rho [1 - (1 - 1/rho)^n] (classic) and
// the central coefficients lambda_n^0 built at x = 1/2 through w = y/(1-y)^2.

namespace szeta::keiper_li {

using mp::Bits;
using mp::Complex;
using mp::Estimate;
using mp::PrecisionContext;
using mp::Real;

enum class Variant { classic, central };
enum class LambdaMethod { binomial_sum, series_composition, direct_zero_sum, contour };

[[nodiscard]] std::string to_string(Variant v);
[[nodiscard]] std::string to_string(LambdaMethod m);
[[nodiscard]] Variant parse_variant(const std::string& s);

struct LambdaSeries {
  Variant variant = Variant::classic;
  LambdaMethod method = LambdaMethod::binomial_sum;
  long n_first = 1;
  std::vector<Real> values;  // values[i] is lambda_{n_first + i}
  std::vector<Real> errors;
  std::vector<Bits> precision_used;
  std::vector<double> cancellation_digits;  // log10(max |partial term| / |lambda_n|)

  [[nodiscard]] long n_last() const { return n_first + static_cast<long>(values.size()) - 1; }
  [[nodiscard]] const Real& at(long n) const;
  [[nodiscard]] const Real& error_at(long n) const;
};

/// Starting precision of the binomial routes: ceil(3.5 n_max) + 128 bits.
[[nodiscard]] Bits binomial_bits(long n_max);

/// lambda_n = -n sum_m ((-1)^m/m) C(m+n-1, 2m-1) Z_B_*(m)  (classic), or
/// lambda_n^0 = n sum_m C(m+n-1, 2m-1) (log Xi)^{(2m)}(1/2)/(2m)!  (central).
[[nodiscard]] LambdaSeries lambda_binomial(Variant v, long n_max, const PrecisionContext& ctx);
/// Power-series composition of log Xi with z/(1-z) (classic, about 1) or y/(1-y)^2 (central, about 1/2).
[[nodiscard]] LambdaSeries lambda_composition(Variant v, long n_max, const PrecisionContext& ctx);
/// Pair-summed sum over the zero set, tail-corrected when `tail`.
[[nodiscard]] Estimate<Real> lambda_direct(Variant v, long n, const zeros::ZeroSet& set, const PrecisionContext& ctx,
                                           bool tail = true);
[[nodiscard]] LambdaSeries lambda_direct_series(Variant v, long n_max, const zeros::ZeroSet& set,
                                                const PrecisionContext& ctx, bool tail = true);
/// lambda_n = ((-1)^n n i/pi) contour integral of Gamma(s+n)Gamma(s-n)/Gamma(2s+1) Z(s) ds around 1..n,
/// with Z = Z_B(.|1/2) (classic) or Z_B(.|0) (central) summed over the set.  1 <= n <= 6.
[[nodiscard]] Estimate<Real> lambda_contour(Variant v, long n, const zeros::ZeroSet& set, const PrecisionContext& ctx);

/// 2 pi n [2 R_{-2}(log n - 1 + gamma) + R_{-1}].
[[nodiscard]] Real predict_tempered(long n, const zeros::AsymptoticModel& model);

struct Oscillation {
  std::vector<Complex> terms;  // one per off-line entry
  std::vector<Real> rates;     // growth rate per step of each term
  Complex total;
};
/// Oscillatory contribution of the off-line entries: -q^n - conj(q^n) with
/// q = (tau + i/2)/(tau - i/2) (classic) or q = e^{i theta} (central), for the
/// member with Im tau > 0.  DomainError when every entry is on the line.
[[nodiscard]] Oscillation predict_oscillation(const zeros::ZeroSet& set, Variant v, long n);

enum class Classification { rh_consistent, violation_signature, inconclusive };
[[nodiscard]] std::string to_string(Classification c);

struct CriterionReport {
  Variant variant = Variant::classic;
  long n_lo = 0, n_hi = 0;
  std::vector<long> n;
  std::vector<Real> residuals;  // (lambda_n - predict_tempered(n)) / n
  Classification classification = Classification::inconclusive;
  std::optional<double> fitted_growth_rate;
  std::optional<double> fit_relative_error;
  std::optional<double> predicted_growth_rate;
  std::vector<double> octave_max;  // max |residual| over [n_lo 2^j, n_lo 2^{j+1})
  std::string note;
};

/// Residuals of the series against the tempered law on [n_lo, n_hi]; a growing
/// oscillatory mode in the residual is fitted by linear prediction.
[[nodiscard]] CriterionReport criterion_report(const LambdaSeries& series, long n_lo, long n_hi,
                                               const zeros::AsymptoticModel& model,
                                               const zeros::ZeroSet* set = nullptr);

}  // namespace szeta::keiper_li
