#pragma once

#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::mp {

/// Derivatives 0..d in s of the entire part R(s) = zeta(s,w) - 1/(s-1),
/// by Euler-Maclaurin summation differentiated termwise.  Working precision.
/// `error` (optional) receives the estimated absolute error of entry 0.
[[nodiscard]] std::vector<Complex> hurwitz_regular(const Complex& s, const Real& w, int d, Real* error = nullptr);

/// d-th s-derivative of zeta(s, w) at the working precision; PoleError at s = 1.
[[nodiscard]] Complex hurwitz(const Complex& s, const Real& w, int d = 0, Real* error = nullptr);

/// Same, under the escalation policy of `ctx`, with an error estimate.
[[nodiscard]] Estimate<Complex> hurwitz_zeta(const Complex& s, const Real& w, int d, const PrecisionContext& ctx);

/// Finite part of zeta(s, w) at s = 1, i.e. -psi(w).
[[nodiscard]] Real hurwitz_fp1(const Real& w);

[[nodiscard]] Complex zeta(const Complex& s);
[[nodiscard]] Real zeta(const Real& s);

/// G(s) = (s-1) zeta(s) and G'(s), regular at s = 1.
struct ZetaG {
  Complex g;
  Complex dg;
};
[[nodiscard]] ZetaG zeta_g(const Complex& s);

/// beta(s) = 4^{-s} [zeta(s,1/4) - zeta(s,3/4)].
[[nodiscard]] Complex dirichlet_beta(const Complex& s);
[[nodiscard]] Estimate<Complex> dirichlet_beta(const Complex& s, const PrecisionContext& ctx);

}  // namespace szeta::mp
