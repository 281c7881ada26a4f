#pragma once

#include <memory>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::mp {

/// B_0, B_2, ..., B_{2(count-1)} at the working precision, shared between callers.
[[nodiscard]] std::shared_ptr<const std::vector<Real>> bernoulli_reals(long count);

[[nodiscard]] Real gamma(const Real& x);
/// log Gamma(x) for x > 0.
[[nodiscard]] Real log_gamma(const Real& x);
[[nodiscard]] Real digamma(const Real& x);

/// Principal branch of log Gamma (continuous off the negative real axis).
[[nodiscard]] Complex log_gamma(const Complex& z);
[[nodiscard]] Complex digamma(const Complex& z);

/// psi^{(k)}(x) for x > 0 by the asymptotic series after an upward shift.
[[nodiscard]] Real polygamma(int k, const Real& x);
[[nodiscard]] Estimate<Real> polygamma(int k, const Real& x, const PrecisionContext& ctx);

}  // namespace szeta::mp
