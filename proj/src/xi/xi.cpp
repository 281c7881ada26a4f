#include "szeta/xi/xi.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "szeta/errors.hpp"
#include "szeta/mp/cauchy.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/rational.hpp"

namespace szeta::xi {

using mp::PrecisionScope;

namespace {

Real half() { return Real(1L) / 2; }

bool left_of_center(const Complex& x) { return x.re() < half(); }

void check_not_near_zero(const Complex& g) {
  if (mp::magnitude(g) <= mp::pow2(-(mp::working_bits() - 16)))
    throw NearZeroError("Xi vanishes to working precision at this point");
}

}  // namespace

Complex xi(const Complex& x) {
  if (left_of_center(x)) return xi(Complex(1L) - x);
  Bits outer = mp::working_bits();
  Complex r;
  {
    PrecisionScope guard(outer + 16);
    auto zg = mp::zeta_g(x);
    Complex lg = mp::log_gamma(Complex(1L) + x / 2);
    Complex e = lg - x * (mp::log(mp::pi()) / 2);
    r = mp::exp(e) * zg.g * 2;
  }
  r.re().round_to(outer);
  r.im().round_to(outer);
  return r;
}

Estimate<Complex> xi(const Complex& x, const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) { return xi(x); });
}

Complex xi_log_deriv(const Complex& x) {
  if (left_of_center(x)) return -xi_log_deriv(Complex(1L) - x);
  Bits outer = mp::working_bits();
  Complex r;
  {
    PrecisionScope guard(outer + 16);
    auto zg = mp::zeta_g(x);
    check_not_near_zero(zg.g);
    // d/dx log[2 pi^{-x/2} Gamma(1 + x/2) G(x)]
    Complex psi = mp::digamma(Complex(1L) + x / 2);
    r = psi / 2 - mp::log(mp::pi()) / 2 + zg.dg / zg.g;
  }
  r.re().round_to(outer);
  r.im().round_to(outer);
  return r;
}

Estimate<Complex> xi_log_deriv(const Complex& x, const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) { return xi_log_deriv(x); });
}

Complex zeta_log_deriv(const Complex& x) {
  if (x.re() == 1L && mp::is_zero(x.im())) throw PoleError("zeta'/zeta has a pole at 1");
  Bits outer = mp::working_bits();
  Complex r;
  {
    PrecisionScope guard(outer + 16);
    auto zg = mp::zeta_g(x);
    check_not_near_zero(zg.g);
    r = zg.dg / zg.g - mp::reciprocal(x - 1L);
  }
  r.re().round_to(outer);
  r.im().round_to(outer);
  return r;
}

Real hardy_theta(const Real& t) {
  Complex lg = mp::log_gamma(Complex(Real(1L) / 4, t / 2));
  return lg.im() - t / 2 * mp::log(mp::pi());
}

Real hardy_z(const Real& t) {
  Bits outer = mp::working_bits();
  Real r;
  {
    PrecisionScope guard(outer + 16 + static_cast<Bits>(mp::exponent(t)));
    Real th = hardy_theta(t);
    Complex z = mp::zeta(Complex(half(), t));
    r = (mp::expi(th) * z).re();
  }
  r.round_to(outer);
  return r;
}

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::log_xi: return "log_xi";
    case Tag::log_zeta: return "log_zeta";
    case Tag::log_abs_zeta: return "log_abs_zeta";
  }
  return "?";
}

Real LogDerivSeries::derivative(long n) const {
  if (n < 1 || n > order()) throw DomainError("derivative order outside the series");
  return mp::to_real(mp::factorial(n - 1)) * c[n - 1];
}

Real LogDerivSeries::taylor(long n) const {
  if (n < 1 || n > order()) throw DomainError("derivative order outside the series");
  return c[n - 1] / n;
}

Real LogDerivSeries::derivative_error(long n) const {
  if (n < 1 || n > order()) throw DomainError("derivative order outside the series");
  return mp::to_real(mp::factorial(n - 1)) * scaled_error / mp::pow(radius, n - 1);
}

std::vector<Real> LogDerivSeries::values() const {
  std::vector<Real> v;
  for (long n = 1; n <= order(); ++n) v.push_back(derivative(n));
  return v;
}

Real max_radius(Tag tag, const Real& b) {
  Real g = Real::parse(kFirstOrdinate);
  Real zero_dist = mp::hypot(b - half(), g);
  if (tag == Tag::log_xi) return zero_dist;
  Real r = mp::min(zero_dist, mp::abs(b - 1L));
  return mp::min(r, mp::abs(b + 2L));
}

Real default_radius(Tag tag, const Real& b) {
  Real m = max_radius(tag, b);
  if (tag == Tag::log_xi) {
    Real five(5L);
    return five < m / 2 ? five : m / 2;
  }
  return m / 2;
}

namespace {

using CacheKey = std::tuple<int, std::string, std::string, Bits>;
std::mutex g_mutex;
std::map<CacheKey, LogDerivSeries> g_cache;

LogDerivSeries compute_series(Tag tag, const Real& b, long N, const Real& radius) {
  mp::CauchyOptions opt;
  opt.radius = radius;
  opt.odd = tag == Tag::log_xi && b == half();
  std::function<Complex(const Complex&)> F;
  if (tag == Tag::log_xi) F = [](const Complex& z) { return xi_log_deriv(z); };
  else F = [](const Complex& z) { return zeta_log_deriv(z); };
  auto res = mp::cauchy_taylor(F, b, N, opt);
  LogDerivSeries s;
  s.tag = tag;
  s.b = b;
  s.radius = radius;
  s.bits = mp::working_bits();
  s.nodes = res.nodes;
  s.c = std::move(res.coeffs);
  s.scaled_error = res.scaled_error;
  return s;
}

}  // namespace

void clear_series_cache() {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_cache.clear();
}

LogDerivSeries log_deriv_series(Tag tag, const Real& b, long N, const PrecisionContext& ctx,
                                std::optional<Real> radius) {
  ctx.validate();
  if (N < 1) throw DomainError("series order must be at least 1");
  Real r;
  {
    PrecisionScope scope(ctx.bits);
    r = radius ? *radius : default_radius(tag, b);
    if (!(r > 0)) throw RadiusError("radius must be positive");
    if (r >= max_radius(tag, b))
      throw RadiusError("circle of radius " + mp::to_string(r, 8) + " about " + mp::to_string(b, 8) +
                        " reaches a singularity of the logarithmic derivative");
  }
  auto run = [&](Bits bits) {
    CacheKey key{static_cast<int>(tag), mp::to_string(b, 60), mp::to_string(r, 60), bits};
    {
      std::lock_guard<std::mutex> lock(g_mutex);
      auto it = g_cache.find(key);
      if (it != g_cache.end() && it->second.order() >= N) {
        LogDerivSeries s = it->second;
        s.c.resize(static_cast<size_t>(N));
        return s;
      }
    }
    LogDerivSeries s;
    {
      PrecisionScope scope(bits);
      s = compute_series(tag, b, N, r);
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    auto& slot = g_cache[key];
    if (slot.order() < s.order()) slot = s;
    return s;
  };
  if (ctx.escalation == mp::Escalation::fixed) return run(ctx.bits);
  int digits = ctx.digits();
  for (Bits bits = ctx.bits; bits <= ctx.max_bits; bits *= 2) {
    LogDerivSeries lo = run(bits);
    LogDerivSeries hi = run(bits + 64);
    PrecisionScope scope(bits + 64);
    Real tol = mp::pow(Real(10L), -static_cast<long>(digits));
    Real scale(1L);
    for (const auto& x : hi.c) scale = mp::max(scale, mp::abs(x));
    bool ok = true;
    Real rk(1L);
    Real worst;
    for (long k = 0; k < N; ++k) {
      if (k > 0) rk *= r;
      Real d = mp::abs(hi.c[k] - lo.c[k]) * rk;
      worst = mp::max(worst, d);
      if (d > tol * scale) ok = false;
    }
    if (ok) {
      hi.scaled_error = mp::max(hi.scaled_error, worst);
      return hi;
    }
  }
  throw ConvergenceError("log-derivative series did not reach the target digits");
}

}  // namespace szeta::xi
