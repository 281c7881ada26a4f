#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "szeta/mp/real.hpp"

namespace szeta::mp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
[[nodiscard]] std::string to_string(const Rational& q);
/// Accepts "p", "p/q" and terminating decimals such as "-0.25".
[[nodiscard]] Rational parse_rational(std::string_view text);
/// One-way exact-to-float conversion at the working precision.
[[nodiscard]] inline Real to_real(const Rational& q) { return Real(q); }
[[nodiscard]] inline Real to_real(const BigInt& z) { return Real(z); }

[[nodiscard]] BigInt binomial(long n, long k);
[[nodiscard]] BigInt factorial(long n);
[[nodiscard]] Rational rpow(const Rational& base, long e);

}  // namespace szeta::mp
