#include "szeta/mp/gamma.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "szeta/errors.hpp"
#include "szeta/mp/bernoulli.hpp"

namespace szeta::mp {

namespace {

std::mutex g_cache_mutex;
std::map<Bits, std::shared_ptr<const std::vector<Real>>> g_cache;

// Smallest |z| at which the Stirling series reaches 2^-bits before diverging.
double stirling_radius(Bits bits) { return 0.12 * static_cast<double>(bits) + 8.0; }

long shift_for(double x, double y, double need) {
  double target = need * need - y * y;
  if (target <= 0) return x < 0 ? static_cast<long>(std::ceil(-x)) : 0;
  double m = std::ceil(std::sqrt(target) - x);
  if (x + m < 0) m = std::ceil(-x);
  return m > 0 ? static_cast<long>(m) : 0;
}

bool is_nonpositive_integer(const Complex& z) {
  return is_zero(z.im()) && z.re() <= 0 && is_integer(z.re());
}

}  // namespace

std::shared_ptr<const std::vector<Real>> bernoulli_reals(long count) {
  Bits bits = working_bits();
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(bits);
  if (it != g_cache.end() && static_cast<long>(it->second->size()) >= count) return it->second;
  long n = std::max<long>(count, it == g_cache.end() ? 64 : 2 * static_cast<long>(it->second->size()));
  auto v = std::make_shared<std::vector<Real>>();
  v->reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) v->push_back(to_real(bernoulli_number(2 * k)));
  g_cache[bits] = v;
  return v;
}

Real gamma(const Real& x) { Real r = fresh(); mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN); return r; }

Real log_gamma(const Real& x) {
  if (!(x > 0)) throw DomainError("log_gamma of a nonpositive real");
  Real r = fresh();
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real digamma(const Real& x) { return polygamma(0, x); }

Complex log_gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma at a pole");
  if (is_zero(z.im()) && z.re() > 0) return Complex(log_gamma(z.re()));
  Bits outer = working_bits();
  Complex result;
  {
    PrecisionScope guard(outer + 32);
    double x = to_double(z.re()), y = to_double(z.im());
    long m = shift_for(x, y, stirling_radius(outer + 32));
    Complex zz = z + m;
    Complex w = reciprocal(zz), w2 = w * w;
    Complex s = (zz - Real(1L) / 2) * log(zz) - zz + log(2 * pi()) / 2;
    Real eps = pow2(-(outer + 32));
    auto b = bernoulli_reals(std::max<long>(64, static_cast<long>(outer)));
    Complex wp = w;
    Real prev;
    for (long k = 1; k < static_cast<long>(b->size()); ++k) {
      Complex t = wp * ((*b)[k] / (2 * k * (2 * k - 1)));
      Real mag = magnitude(t);
      if (k > 2 && mag > prev) throw ConvergenceError("Stirling series diverged in log_gamma");
      s += t;
      if (mag <= eps * magnitude(s)) break;
      prev = mag;
      wp = wp * w2;
    }
    if (m > 0) {
      // log prod (z+i), with the branch fixed by a double-precision argument sum.
      Complex prod(1L);
      double arg_sum = 0;
      for (long i = 0; i < m; ++i) {
        prod = prod * (z + i);
        arg_sum += std::atan2(y, x + static_cast<double>(i));
      }
      Complex lp = log(prod);
      double turns = std::round((arg_sum - to_double(lp.im())) / (2 * M_PI));
      lp.im() += 2 * pi() * static_cast<long>(turns);
      s -= lp;
    }
    result = s;
  }
  result.re().round_to(outer);
  result.im().round_to(outer);
  return result;
}

Complex digamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma at a pole");
  if (is_zero(z.im()) && z.re() > 0) return Complex(polygamma(0, z.re()));
  Bits outer = working_bits();
  Complex result;
  {
    PrecisionScope guard(outer + 32);
    double x = to_double(z.re()), y = to_double(z.im());
    long m = shift_for(x, y, stirling_radius(outer + 32));
    Complex zz = z + m;
    Complex w = reciprocal(zz), w2 = w * w;
    Complex s = log(zz) - w / 2;
    Real eps = pow2(-(outer + 32));
    auto b = bernoulli_reals(std::max<long>(64, static_cast<long>(outer)));
    Complex wp = w2;
    Real prev;
    for (long k = 1; k < static_cast<long>(b->size()); ++k) {
      Complex t = wp * ((*b)[k] / (2 * k));
      Real mag = magnitude(t);
      if (k > 2 && mag > prev) throw ConvergenceError("asymptotic series diverged in digamma");
      s -= t;
      if (mag <= eps * magnitude(s)) break;
      prev = mag;
      wp = wp * w2;
    }
    for (long i = 0; i < m; ++i) s -= reciprocal(z + i);
    result = s;
  }
  result.re().round_to(outer);
  result.im().round_to(outer);
  return result;
}

Real polygamma(int k, const Real& x) {
  if (k < 0) throw DomainError("negative polygamma order");
  if (!(x > 0)) throw DomainError("polygamma needs x > 0");
  Bits outer = working_bits();
  Real result;
  {
    Bits inner = outer + 32 + 2 * static_cast<Bits>(k);
    PrecisionScope guard(inner);
    double need = stirling_radius(inner) + k;
    double xd = to_double(x);
    long m = xd < need ? static_cast<long>(std::ceil(need - xd)) : 0;
    Real xx = x + m;
    Real w = 1L / xx, w2 = w * w;
    Real eps = pow2(-inner);
    auto b = bernoulli_reals(std::max<long>(64, static_cast<long>(inner)));
    Real s;
    if (k == 0) {
      s = log(xx) - w / 2;
      Real wp = w2, prev;
      for (long j = 1; j < static_cast<long>(b->size()); ++j) {
        Real t = wp * (*b)[j] / (2 * j);
        if (j > 2 && abs(t) > prev) throw ConvergenceError("asymptotic series diverged in digamma");
        s -= t;
        if (abs(t) <= eps * abs(s)) break;
        prev = abs(t);
        wp *= w2;
      }
    } else {
      // (k-1)!/x^k + k!/(2x^{k+1}) + sum_j B_2j (2j+k-1)!/((2j)! x^{2j+k})
      Real fk1 = to_real(factorial(k - 1));
      Real wk = pow(w, static_cast<long>(k));
      s = fk1 * wk + fk1 * k * wk * w / 2;
      Real c = fk1 * wk;  // (2j+k-1)!/(2j)! x^{-(2j+k)} built incrementally from j = 0
      Real prev;
      for (long j = 1; j < static_cast<long>(b->size()); ++j) {
        c *= w2;
        c *= (2 * j + k - 2) * (2 * j + k - 1);
        c /= (2 * j - 1) * (2 * j);
        Real t = c * (*b)[j];
        if (j > 2 && abs(t) > prev) throw ConvergenceError("asymptotic series diverged in polygamma");
        s += t;
        if (abs(t) <= eps * abs(s)) break;
        prev = abs(t);
      }
      if (k % 2 == 0) s = -s;
    }
    if (m > 0) {
      Real acc;
      for (long i = 0; i < m; ++i) acc += pow(x + i, static_cast<long>(-k - 1));
      Real kf = to_real(factorial(k));
      if (k % 2 == 0) s -= kf * acc;
      else s += kf * acc;
    }
    result = s;
  }
  result.round_to(outer);
  return result;
}

Estimate<Real> polygamma(int k, const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("polygamma needs x > 0");
  Real xx = x;
  return escalate(ctx, [&](const PrecisionContext&) { return polygamma(k, xx); });
}

}  // namespace szeta::mp
