#include "szeta/mp/hurwitz.hpp"

#include <cmath>
#include <vector>

#include "szeta/errors.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/rational.hpp"

namespace szeta::mp {

namespace {

using Series = std::vector<Complex>;  // truncated power series in delta = s - s0

Series mul(const Series& a, const Series& b) {
  size_t n = a.size();
  Series r(n, Complex(0L));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Powers n^{-s0} and log n for n = 1..count, built multiplicatively from a
// smallest-prime-factor sieve so only primes need a transcendental call.
void unit_powers(long count, const Complex& s, std::vector<Complex>& pw, std::vector<Real>& lg) {
  std::vector<long> spf(static_cast<size_t>(count) + 1, 0);
  for (long i = 2; i <= count; ++i)
    if (spf[i] == 0)
      for (long j = i; j <= count; j += i)
        if (spf[j] == 0) spf[j] = i;
  pw.assign(static_cast<size_t>(count) + 1, Complex(0L));
  lg.assign(static_cast<size_t>(count) + 1, Real(0L));
  if (count >= 1) pw[1] = Complex(1L);
  for (long n = 2; n <= count; ++n) {
    long p = spf[n];
    if (p == n) {
      lg[n] = log(Real(n));
      pw[n] = exp(-(s * lg[n]));
    } else {
      lg[n] = lg[p] + lg[n / p];
      pw[n] = pw[p] * pw[n / p];
    }
  }
}

// Coefficients in delta of (a^{-(s-1)} - 1)/(s - 1), a = e^L, around s0.
Series pole_part(const Complex& s0, const Real& L, const Complex& a_pow_1ms, int d, const Real& eps) {
  Complex u0 = s0 - 1L;
  Series f(static_cast<size_t>(d) + 1, Complex(0L));
  if (abs(u0) * L >= Real(1L) / 2) {
    Series g(f.size()), h(f.size());
    g[0] = a_pow_1ms - 1L;
    Complex c = a_pow_1ms;
    Complex inv = reciprocal(u0), ip = inv;
    for (int i = 0; i <= d; ++i) {
      if (i > 0) {
        c = c * (-L) / i;
        g[i] = c;
      }
      h[i] = (i % 2 == 0) ? ip : -ip;
      ip = ip * inv;
    }
    return mul(g, h);
  }
  // -L phi(-uL), phi(x) = sum x^k/(k+1)!, differentiated i times in u.
  Real mL = -L;
  for (int i = 0; i <= d; ++i) {
    Complex t = Complex(pow(mL, static_cast<long>(i)) / to_real(factorial(i + 1)));
    Complex sum = t;
    for (long k = i; k < 100000; ++k) {
      t = t * u0 * (mL * (k + 1)) / ((k + 1 - i) * (k + 2));
      sum += t;
      if (k > i + 2 && magnitude(t) <= eps * magnitude(sum)) break;
    }
    f[i] = sum * (-L);
  }
  return f;
}

struct Attempt {
  bool ok = false;
  Series value;
  Real error;
};

Attempt em_attempt(const Complex& s, const Real& w, int d, long N) {
  Bits bits = working_bits();
  Real eps = pow2(-bits);
  size_t len = static_cast<size_t>(d) + 1;
  Series total(len, Complex(0L));
  Real scale;

  auto add_term = [&](const Complex& p, const Real& L) {
    Complex c = p;
    total[0] += c;
    Real mL = -L;
    for (int i = 1; i <= d; ++i) {
      c = c * mL / i;
      total[i] += c;
    }
    scale += magnitude(p);
  };

  if (w == 1L) {
    std::vector<Complex> pw;
    std::vector<Real> lg;
    unit_powers(N, s, pw, lg);
    for (long n = 1; n <= N; ++n) add_term(pw[n], lg[n]);
    // the direct sum covered n + w for n = 0..N-1
  } else {
    for (long n = 0; n < N; ++n) {
      Real x = w + n;
      Real L = log(x);
      add_term(exp(-(s * L)), L);
    }
  }

  Real a = w + N;
  Real L = log(a);
  Complex A = exp(-(s * L));  // a^{-s}
  Series E(len);
  E[0] = Complex(1L);
  for (int i = 1; i <= d; ++i) E[i] = E[i - 1] * (-L) / i;
  scale += magnitude(A) * a;

  // a^{-s}/2
  for (size_t i = 0; i < len; ++i) total[i] += A * E[i] / 2;

  // Euler-Maclaurin corrections: sum_j B_2j/(2j)! (s)_{2j-1} a^{-s-2j+1}
  Series P(len, Complex(0L));  // Pochhammer (s)_{2j-1} as a series in delta
  P[0] = s;
  if (d >= 1) P[1] = Complex(1L);
  Series S(len, Complex(0L));
  auto b = bernoulli_reals(std::max<long>(64, static_cast<long>(bits)));
  Real a2 = a * a;
  Real coef = 1L / a;  // a^{1-2j} / (2j)!, without the Bernoulli number
  coef /= 2;
  Real prev_mag;
  Real Amag = magnitude(A);
  bool converged = false;
  Real last;
  for (long j = 1; j < static_cast<long>(b->size()); ++j) {
    if (j > 1) {
      Series f1(len, Complex(0L)), f2(len, Complex(0L));
      f1[0] = s + (2 * j - 3);
      f2[0] = s + (2 * j - 2);
      if (d >= 1) {
        f1[1] = Complex(1L);
        f2[1] = Complex(1L);
      }
      P = mul(mul(P, f1), f2);
      coef /= a2;
      coef /= (2 * j - 1) * (2 * j);
    }
    Real c = coef * (*b)[j];
    Real mag;
    for (size_t i = 0; i < len; ++i) {
      Complex t = P[i] * c;
      S[i] += t;
      mag = max(mag, magnitude(t));
    }
    mag *= Amag;
    last = mag;
    if (j > 3 && mag > prev_mag) return {};
    if (mag <= eps * scale) {
      converged = true;
      break;
    }
    prev_mag = mag;
  }
  if (!converged) return {};
  Series corr = mul(E, S);
  for (size_t i = 0; i < len; ++i) total[i] += A * corr[i];

  Series pole = pole_part(s, L, A * a, d, eps);
  for (size_t i = 0; i < len; ++i) total[i] += pole[i];

  Real fact(1L);
  for (int i = 1; i <= d; ++i) {
    fact *= i;
    total[i] = total[i] * fact;
  }
  Attempt out;
  out.ok = true;
  out.value = std::move(total);
  out.error = last + eps * scale * (N + 10);
  return out;
}

}  // namespace

std::vector<Complex> hurwitz_regular(const Complex& s, const Real& w, int d, Real* error) {
  if (!(w > 0)) throw DomainError("Hurwitz zeta needs w > 0");
  if (d < 0) throw DomainError("negative derivative order");
  Bits outer = working_bits();
  double digits = static_cast<double>(outer) * 0.30103;
  double smag = std::hypot(to_double(s.re()), to_double(s.im()));
  long N = static_cast<long>(std::ceil(std::max(0.4 * digits, smag / M_PI))) + 2;
  Bits guard = 16 + static_cast<Bits>(std::log2(static_cast<double>(N) + 1.0)) + 4 * static_cast<Bits>(d);
  for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
    Attempt r;
    {
      PrecisionScope scope(outer + guard);
      r = em_attempt(s, w, d, N);
    }
    if (!r.ok) continue;
    for (auto& z : r.value) {
      z.re().round_to(outer);
      z.im().round_to(outer);
    }
    if (error) {
      *error = r.error;
      error->round_to(outer);
    }
    return r.value;
  }
  throw ConvergenceError("Euler-Maclaurin truncation did not converge");
}

Complex hurwitz(const Complex& s, const Real& w, int d, Real* error) {
  if (s.re() == 1L && is_zero(s.im())) throw PoleError("zeta(s, w) has a pole at s = 1");
  auto r = hurwitz_regular(s, w, d, error);
  // derivative d of 1/(s-1) is (-1)^d d! / (s-1)^{d+1}
  Complex u = s - 1L;
  Complex p = pow(reciprocal(u), static_cast<long>(d) + 1);
  Real f = to_real(factorial(d));
  if (d % 2 == 1) f = -f;
  return r[d] + p * f;
}

Estimate<Complex> hurwitz_zeta(const Complex& s, const Real& w, int d, const PrecisionContext& ctx) {
  if (s.re() == 1L && is_zero(s.im())) throw PoleError("zeta(s, w) has a pole at s = 1");
  Real em_error;
  Estimate<Complex> e = escalate(ctx, [&](const PrecisionContext&) { return hurwitz(s, w, d, &em_error); });
  e.error += abs(em_error);
  return e;
}

Real hurwitz_fp1(const Real& w) { return hurwitz_regular(Complex(Real(1L)), w, 0)[0].re(); }

Complex zeta(const Complex& s) { return hurwitz(s, Real(1L), 0); }

Real zeta(const Real& s) {
  Real r = fresh();
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

ZetaG zeta_g(const Complex& s) {
  auto r = hurwitz_regular(s, Real(1L), 1);
  Complex u = s - 1L;
  return {u * r[0] + 1L, r[0] + u * r[1]};
}

Complex dirichlet_beta(const Complex& s) {
  auto a = hurwitz_regular(s, Real(1L) / 4, 0);
  auto b = hurwitz_regular(s, Real(3L) / 4, 0);
  return pow(Real(4L), -s) * (a[0] - b[0]);
}

Estimate<Complex> dirichlet_beta(const Complex& s, const PrecisionContext& ctx) {
  return escalate(ctx, [&](const PrecisionContext&) { return dirichlet_beta(s); });
}

}  // namespace szeta::mp
