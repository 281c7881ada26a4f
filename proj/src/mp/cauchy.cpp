#include "szeta/mp/cauchy.hpp"

#include "szeta/errors.hpp"

namespace szeta::mp {

namespace {

struct Table {
  std::vector<Real> c, s;  // cos, sin of 2 pi m / M
};

Table unit_roots(long M) {
  Table t;
  t.c.reserve(static_cast<size_t>(M));
  t.s.reserve(static_cast<size_t>(M));
  Real step = 2 * pi() / M;
  for (long m = 0; m < M; ++m) {
    Real sn = fresh(), cs = fresh();
    sin_cos(step * m, sn, cs);
    t.c.push_back(cs);
    t.s.push_back(sn);
  }
  return t;
}

}  // namespace

CauchyResult cauchy_taylor(const std::function<Complex(const Complex&)>& f, const Real& b, long count,
                           const CauchyOptions& opt) {
  if (count < 1) throw DomainError("need at least one coefficient");
  if (!(opt.radius > 0)) throw DomainError("Cauchy radius must be positive");
  const Real& r = opt.radius;
  long M = 8;
  while (M < opt.min_nodes || M <= 2 * count + 2) M *= 2;
  if (M > opt.max_nodes) throw ConvergenceError("Cauchy node cap below the requested order");
  Bits bits = working_bits();
  Real tol_rel = pow2(-(bits - opt.guard_bits) / 2);

  // values[j] = f(b + r e^{2 pi i j / M}) for j = 0..span, span = M/2 (or M/4 when odd)
  std::vector<Complex> values;
  std::vector<Real> prev;
  Real max_abs;
  long evaluations = 0;

  for (; M <= opt.max_nodes; M *= 2) {
    long span = opt.odd ? M / 4 : M / 2;
    Table tab = unit_roots(M);
    std::vector<Complex> next(static_cast<size_t>(span) + 1);
    for (long j = 0; j <= span; ++j) {
      if (!values.empty() && j % 2 == 0) {
        next[j] = values[static_cast<size_t>(j / 2)];
        continue;
      }
      Complex z(b + r * tab.c[j], r * tab.s[j]);
      next[j] = f(z);
      ++evaluations;
      max_abs = max(max_abs, magnitude(next[j]));
    }
    values = std::move(next);

    std::vector<Real> coeffs(static_cast<size_t>(count), Real(0L));
    Real rk(1L);
    Real inv_r = 1L / r;
    for (long k = 0; k < count; ++k) {
      if (k > 0) rk *= inv_r;
      if (opt.odd && k % 2 == 0) continue;
      auto term = [&](long j) {
        long m = (k * j) % M;
        return values[j].re() * tab.c[m] + values[j].im() * tab.s[m];
      };
      Real acc;
      if (opt.odd) {
        acc = values[0].re() + term(span);
        Real inner;
        for (long j = 1; j < span; ++j) inner += term(j);
        acc += 2 * inner;
        acc = acc * 2 / M;
      } else {
        acc = values[0].re();
        if (k % 2 == 0) acc += values[span].re();
        else acc -= values[span].re();
        Real inner;
        for (long j = 1; j < span; ++j) inner += term(j);
        acc += 2 * inner;
        acc = acc / M;
      }
      coeffs[k] = acc * rk;
    }

    if (!prev.empty()) {
      Real delta;
      Real rk2(1L);
      for (long k = 0; k < count; ++k) {
        if (k > 0) rk2 *= r;
        delta = max(delta, abs(coeffs[k] - prev[k]) * rk2);
      }
      if (delta <= tol_rel * max_abs) {
        CauchyResult out;
        out.coeffs = std::move(coeffs);
        out.nodes = M;
        out.evaluations = evaluations;
        out.max_abs = max_abs;
        out.scaled_error = sqr(delta) / max(max_abs, pow2(-bits)) + max_abs * pow2(-(bits - opt.guard_bits));
        return out;
      }
    }
    prev = std::move(coeffs);
  }
  throw ConvergenceError("Cauchy node doubling exceeded " + std::to_string(opt.max_nodes) + " nodes");
}

}  // namespace szeta::mp
