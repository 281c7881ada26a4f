#include "szeta/mp/stieltjes.hpp"

#include "szeta/errors.hpp"
#include "szeta/mp/cauchy.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/mp/series.hpp"

namespace szeta::mp {

std::vector<Real> zeta_g_taylor_at_one(long count) {
  CauchyOptions opt;
  opt.radius = Real(1L) / 2;
  auto g = [](const Complex& s) { return zeta_g(s).g; };
  return cauchy_taylor(g, Real(1L), count, opt).coeffs;
}

std::vector<Real> stieltjes_cumulants(long N) {
  if (N < 1) throw DomainError("need N >= 1");
  Bits outer = working_bits();
  std::vector<Real> out;
  {
    PrecisionScope guard(outer + 2 * static_cast<Bits>(N) + 16);
    auto c = zeta_g_taylor_at_one(N + 1);
    Real c0 = c[0];
    for (auto& x : c) x /= c0;
    c[0] = Real(1L);
    auto l = series::log1(c);
    Real fact(1L);
    for (long n = 1; n <= N; ++n) {
      fact *= n;
      Real g = fact * l[n];
      out.push_back(n % 2 == 0 ? -g : g);
    }
  }
  for (auto& x : out) x.round_to(outer);
  return out;
}

std::vector<Estimate<Real>> stieltjes_cumulants(long N, const PrecisionContext& ctx) {
  ctx.validate();
  int digits = ctx.digits();
  for (Bits b = ctx.bits; b <= ctx.max_bits; b *= 2) {
    std::vector<Real> lo, hi;
    {
      PrecisionScope scope(b);
      lo = stieltjes_cumulants(N);
    }
    PrecisionScope scope(b + 64);
    hi = stieltjes_cumulants(N);
    std::vector<Estimate<Real>> out;
    bool ok = true;
    for (long n = 0; n < N; ++n) {
      Real d = abs(hi[n] - lo[n]);
      if (ctx.escalation == Escalation::double_and_compare &&
          d > max(abs(hi[n]), Real(1L)) * pow(Real(10L), -static_cast<long>(digits)))
        ok = false;
      out.push_back({hi[n], d, b + 64});
    }
    if (ok || ctx.escalation == Escalation::fixed) return out;
  }
  throw ConvergenceError("Stieltjes cumulants did not reach the target digits");
}

}  // namespace szeta::mp
