#pragma once

#include "szeta/mp/rational.hpp"

namespace szeta::mp {

/// B_n with B_1 = -1/2.  Even indices come from a cached tangent-number table.
[[nodiscard]] Rational bernoulli_number(long n);
/// B_n(w) = sum_k C(n,k) B_k w^{n-k}.
[[nodiscard]] Rational bernoulli_poly(long n, const Rational& w);
/// Euler (secant) numbers: 1, -1, 5, -61, ...; odd n throws DomainError.
[[nodiscard]] BigInt euler_number(long n);

}  // namespace szeta::mp
