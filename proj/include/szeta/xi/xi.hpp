#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::xi {

using mp::Bits;
using mp::Complex;
using mp::Estimate;
using mp::PrecisionContext;
using mp::Real;

/// Ordinate of the first Riemann zero, to 30 digits.  Only used for radius checks.
inline constexpr const char* kFirstOrdinate = "14.134725141734693790457251983562";

/// Xi(x) = x(x-1) pi^{-x/2} Gamma(x/2) zeta(x), Xi(0) = Xi(1) = 1.
[[nodiscard]] Complex xi(const Complex& x);
[[nodiscard]] Estimate<Complex> xi(const Complex& x, const PrecisionContext& ctx);

/// Xi'/Xi(x); NearZeroError when Xi(x) vanishes to working precision.
[[nodiscard]] Complex xi_log_deriv(const Complex& x);
[[nodiscard]] Estimate<Complex> xi_log_deriv(const Complex& x, const PrecisionContext& ctx);

/// zeta'/zeta(x); PoleError at x = 1.
[[nodiscard]] Complex zeta_log_deriv(const Complex& x);

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
[[nodiscard]] Real hardy_theta(const Real& t);
/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real; sign Xi(1/2+it) = -sign Z(t).
[[nodiscard]] Real hardy_z(const Real& t);

enum class Tag { log_xi, log_zeta, log_abs_zeta };
[[nodiscard]] std::string to_string(Tag tag);

/// Taylor data of f = log Xi or log zeta (log|zeta|) about a real basepoint,
/// carried as the Taylor coefficients c_k of the logarithmic derivative F = f'.
struct LogDerivSeries {
  Tag tag = Tag::log_xi;
  Real b;
  Real radius;
  Bits bits = 0;
  long nodes = 0;
  std::vector<Real> c;  // F(b + z) = sum_k c[k] z^k, k = 0..N-1
  Real scaled_error;    // |error(c_k)| <= scaled_error / radius^k

  [[nodiscard]] long order() const { return static_cast<long>(c.size()); }
  /// f^{(n)}(b), 1 <= n <= order().
  [[nodiscard]] Real derivative(long n) const;
  /// f^{(n)}(b) / n!.
  [[nodiscard]] Real taylor(long n) const;
  /// Error estimate of derivative(n).
  [[nodiscard]] Real derivative_error(long n) const;
  /// f^{(1)}(b), ..., f^{(N)}(b).
  [[nodiscard]] std::vector<Real> values() const;
};

/// Largest admissible radius for the tag at b (distance to the nearest singularity of F).
[[nodiscard]] Real max_radius(Tag tag, const Real& b);
[[nodiscard]] Real default_radius(Tag tag, const Real& b);

/// f^{(n)}(b) for n = 1..N by the Cauchy formula applied to F on a circle.
/// RadiusError when the radius reaches a singularity; results are memoized.
[[nodiscard]] LogDerivSeries log_deriv_series(Tag tag, const Real& b, long N, const PrecisionContext& ctx,
                                              std::optional<Real> radius = std::nullopt);

/// Drops every memoized series (tests use this to time cold runs).
void clear_series_cache();

}  // namespace szeta::xi
