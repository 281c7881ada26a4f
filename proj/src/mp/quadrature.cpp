#include "szeta/mp/quadrature.hpp"

#include "szeta/errors.hpp"

namespace szeta::mp {

namespace {

// Shared driver for double-exponential rules.  `node(t, x, w)` fills the
// abscissa and weight for parameter t.
QuadResult de_driver(const std::function<Complex(const Real&)>& f,
                     const std::function<void(const Real&, Real&, Real&)>& node, const Real& tolerance,
                     int max_level) {
  Bits bits = working_bits();
  Real eps = pow2(-bits);
  const long t_cap = 12;
  QuadResult out;
  Complex sum(0L);  // sum of f(x) w over all nodes so far
  auto walk = [&](const Real& h, long start, long stride) {
    // nodes t = k h for k = start, start + stride, ... on both sides
    for (int side = 0; side < 2; ++side) {
      int small = 0;
      for (long k = start;; k += stride) {
        if (side == 1 && k == 0) continue;
        Real t = h * (side == 0 ? k : -k);
        if (abs(t) > t_cap) break;
        Real x, w;
        node(t, x, w);
        if (!is_finite(x) || !is_finite(w) || is_zero(w)) break;
        Complex term = f(x) * w;
        ++out.evaluations;
        sum += term;
        if (magnitude(term) <= eps * magnitude(sum)) {
          if (++small >= 3) break;
        } else {
          small = 0;
        }
      }
    }
  };
  Real h(1L);
  walk(h, 0, 1);
  Complex prev = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    walk(h, 1, 2);
    Complex cur = sum * h;
    Real delta = abs(cur - prev);
    out.value = cur;
    out.level = level;
    Real mag = max(abs(cur), pow2(-bits));
    if (level >= 3 && delta <= tolerance) {
      out.error = delta;
      return out;
    }
    // error roughly squares each level once the rule is in its asymptotic regime
    if (level >= 4 && sqr(delta) / mag * 10 <= tolerance) {
      out.error = sqr(delta) / mag * 10 + eps * mag;
      return out;
    }
    prev = cur;
  }
  throw ConvergenceError("double-exponential quadrature did not converge");
}

}  // namespace

QuadResult exp_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& tolerance,
                    int max_level) {
  Real half_pi = pi() / 2;
  Real aa = a;
  return de_driver(
      f,
      [&](const Real& t, Real& x, Real& w) {
        Real e = exp(half_pi * sinh(t));
        x = aa + e;
        w = half_pi * cosh(t) * e;
      },
      tolerance, max_level);
}

QuadResult tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& tolerance, int max_level) {
  Real half_pi = pi() / 2;
  Real d = (b - a) / 2;
  Real aa = a, bb = b;
  return de_driver(
      f,
      [&](const Real& t, Real& x, Real& w) {
        Real u = half_pi * sinh(t);
        Real e = exp(-2 * abs(u));
        Real gap = 2 * d * e / (1L + e);  // distance to the nearer endpoint
        x = sign(t) >= 0 ? bb - gap : aa + gap;
        Real ch = cosh(u);
        w = d * half_pi * cosh(t) / sqr(ch);
        if (is_zero(gap)) w = Real(0L);
      },
      tolerance, max_level);
}

QuadResult periodic_mean(const std::function<Complex(const Real&)>& g, const Real& tolerance, long min_nodes,
                         long max_nodes) {
  QuadResult out;
  Complex sum(0L);
  long M = 1;
  sum += g(Real(0L));
  ++out.evaluations;
  Complex prev = sum;
  Real two_pi = 2 * pi();
  for (int level = 1; M < max_nodes; ++level) {
    M *= 2;
    for (long j = 1; j < M; j += 2) {
      sum += g(two_pi * j / M);
      ++out.evaluations;
    }
    Complex cur = sum / M;
    Real delta = abs(cur - prev);
    out.value = cur;
    out.level = level;
    if (M >= min_nodes && delta <= tolerance) {
      out.error = delta;
      return out;
    }
    prev = cur;
  }
  throw ConvergenceError("periodic trapezoid did not converge");
}

}  // namespace szeta::mp
