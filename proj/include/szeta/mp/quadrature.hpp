#pragma once

#include <functional>

#include "szeta/mp/real.hpp"

namespace szeta::mp {

struct QuadResult {
  Complex value;
  Real error;  // difference between the last two levels
  long evaluations = 0;
  int level = 0;
};

/// Integral of f over [a, inf) for f decaying at least exponentially, by the
/// exp-sinh rule x = a + exp((pi/2) sinh t), halving the step each level.
[[nodiscard]] QuadResult exp_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& tolerance,
                                  int max_level = 14);

/// Integral over [a, b] by the tanh-sinh rule.
[[nodiscard]] QuadResult tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                                   const Real& tolerance, int max_level = 14);

/// (1/2pi) times the integral of g(phi) over one period, trapezoid rule with
/// node doubling until two levels agree within `tolerance`.
[[nodiscard]] QuadResult periodic_mean(const std::function<Complex(const Real&)>& g, const Real& tolerance,
                                       long min_nodes = 16, long max_nodes = 1L << 14);

}  // namespace szeta::mp
