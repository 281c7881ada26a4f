#pragma once

#include <functional>
#include <vector>

#include "szeta/mp/real.hpp"

namespace szeta::mp {

struct CauchyOptions {
  Real radius;
  /// f(b - z) = -f(b + z): only odd Taylor coefficients survive, half the nodes.
  bool odd = false;
  long min_nodes = 32;
  long max_nodes = 1L << 14;
  /// Bits of the working precision the node values are not trusted to.
  Bits guard_bits = 16;
};

struct CauchyResult {
  std::vector<Real> coeffs;  // c_k with f(b + z) = sum c_k z^k
  long nodes = 0;
  long evaluations = 0;
  Real scaled_error;  // bound on |error(c_k)| r^k
  Real max_abs;       // max |f| on the circle
};

/// Taylor coefficients c_0..c_{count-1} of f about the real point b, for f real
/// on the real axis and analytic on a disk strictly larger than the radius.
/// Trapezoid rule on the circle; the node count doubles (old nodes reused) until
/// successive coefficient sets differ by less than max|f| 2^{-(bits-guard)/2},
/// which under geometric aliasing decay puts the final error near 2^{-(bits-guard)}.
[[nodiscard]] CauchyResult cauchy_taylor(const std::function<Complex(const Complex&)>& f, const Real& b, long count,
                                         const CauchyOptions& opt);

}  // namespace szeta::mp
