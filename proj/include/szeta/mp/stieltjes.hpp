#pragma once

#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::mp {

/// g_1^c..g_N^c with log[y zeta(1+y)] = -sum_n ((-1)^n/n!) g_n^c y^n.
/// Entry 0 of the result is g_1^c.
[[nodiscard]] std::vector<Real> stieltjes_cumulants(long N);
[[nodiscard]] std::vector<Estimate<Real>> stieltjes_cumulants(long N, const PrecisionContext& ctx);

/// Taylor coefficients of (s-1) zeta(s) about s = 1, orders 0..count-1.
[[nodiscard]] std::vector<Real> zeta_g_taylor_at_one(long count);

}  // namespace szeta::mp
