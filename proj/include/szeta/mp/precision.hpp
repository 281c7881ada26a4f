#pragma once

#include <cmath>
#include <type_traits>
#include <string>

#include "szeta/errors.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::mp {

enum class Escalation { fixed, double_and_compare };

struct PrecisionContext {
  Bits bits = 192;
  Escalation escalation = Escalation::fixed;
  int target_digits = 0;  // 0 means "whatever bits allow"
  Bits max_bits = 4096;

  /// Context whose working precision comfortably holds `digits` decimals.
  static PrecisionContext for_digits(int digits, Escalation e = Escalation::fixed);

  [[nodiscard]] int digits() const {
    return target_digits > 0 ? target_digits : static_cast<int>(std::floor(static_cast<double>(bits) * 0.30103)) - 4;
  }
  [[nodiscard]] PrecisionContext with_bits(Bits b) const {
    PrecisionContext c = *this;
    c.bits = b;
    if (c.max_bits < b) c.max_bits = b;
    return c;
  }
  /// Throws DomainError when the invariants do not hold.
  void validate() const;
};

/// Value with an absolute error estimate and the precision that produced it.
template <class T>
struct Estimate {
  T value;
  Real error;
  Bits bits = 0;
};

/// Evaluates `f` under the escalation policy of `ctx`.  Under fixed it runs once.
/// Under double_and_compare the bits and bits+64 runs must agree to target
/// digits, otherwise bits doubles until max_bits.
template <class F>
auto escalate(const PrecisionContext& ctx, F&& f) -> Estimate<std::decay_t<decltype(f(ctx))>> {
  using T = std::decay_t<decltype(f(ctx))>;
  ctx.validate();
  if (ctx.escalation == Escalation::fixed) {
    PrecisionScope scope(ctx.bits);
    T v = f(ctx);
    return {v, abs(v) * pow2(-(ctx.bits - 8)), ctx.bits};
  }
  int digits = ctx.digits();
  for (Bits b = ctx.bits; b <= ctx.max_bits; b *= 2) {
    T lo, hi;
    {
      PrecisionScope scope(b);
      lo = f(ctx.with_bits(b));
    }
    {
      PrecisionScope scope(b + 64);
      hi = f(ctx.with_bits(b + 64));
    }
    PrecisionScope scope(b + 64);
    Real d = abs(lo - hi);
    Real s = max(abs(hi), pow2(-static_cast<long>(b)));
    Real tol = s * pow(Real(10L), -static_cast<long>(digits));
    if (d <= tol) return {hi, d, b + 64};
  }
  throw ConvergenceError("precision escalation exhausted at " + std::to_string(ctx.max_bits) + " bits");
}

}  // namespace szeta::mp
