#include "szeta/superzeta/superzeta.hpp"

#include <cmath>

#include "szeta/errors.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/quadrature.hpp"
#include "szeta/mp/series.hpp"
#include "szeta/xi/xi.hpp"

namespace szeta::superzeta {

using mp::Bits;
using mp::PrecisionScope;
using xi::Tag;

namespace {

Real half() { return Real(1L) / 2; }

PrecisionContext fixed_at(const PrecisionContext& ctx) {
  PrecisionContext c = ctx;
  c.escalation = mp::Escalation::fixed;
  return c;
}

// B_n(x) at a real argument from the exact Bernoulli numbers.
Real bernoulli_poly_real(long n, const Real& x) {
  Real sum, xp(1L);
  for (long k = n; k >= 0; --k) {
    mp::Rational b = mp::bernoulli_number(k);
    if (b != 0) sum += mp::to_real(mp::Rational(mp::binomial(n, k)) * b) * xp;
    xp *= x;
  }
  return sum;
}

Real log_xi_real(const Real& x) { return mp::log(xi::xi(Complex(x)).re()); }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::ZA: return "A";
    case Family::ZB: return "B";
    case Family::ZC: return "C";
    case Family::ZS: return "S";
    case Family::hurwitz: return "hurwitz";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::table_closed_form: return "table_closed_form";
    case Method::xi_derivative: return "xi_derivative";
    case Method::zba_conversion: return "zba_conversion";
    case Method::z1e_confluence: return "z1e_confluence";
    case Method::continuation: return "continuation";
    case Method::zero_sum: return "zero_sum";
    case Method::numeric_closed_form: return "numeric_closed_form";
  }
  return "?";
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::value: return "value";
    case Quantity::deriv0: return "deriv0";
    case Quantity::finite_part: return "finite_part";
  }
  return "?";
}

std::string SpecialValue::payload_string(int digits) const {
  if (exact()) return mp::to_string(std::get<Rational>(payload));
  return mp::to_string(std::get<Complex>(payload), digits);
}

std::string SpecialValue::shift_string(int digits) const {
  if (std::holds_alternative<Rational>(shift)) return mp::to_string(std::get<Rational>(shift));
  return mp::to_string(std::get<Real>(shift), digits);
}

// ---------------------------------------------------------------------------

Rational za_rational(long n, const Rational& t) {
  if (n < 0) throw DomainError("za_rational needs n >= 0");
  if (n == 0) {
    Rational r = (t + Rational(7, 2)) / 2;
    r.canonicalize();
    return r;
  }
  Rational w = Rational(1, 4) + t / 2;
  Rational r = Rational(mp::BigInt(1) << static_cast<mp_bitcnt_t>(n), n + 1) * mp::bernoulli_poly(n + 1, w) +
               mp::rpow(t + Rational(1, 2), n) + mp::rpow(t - Rational(1, 2), n);
  r.canonicalize();
  return r;
}

Real za_negative(long n, const Real& t) {
  if (n < 0) throw DomainError("za_negative needs n >= 0");
  if (n == 0) return (t + Real(7L) / 2) / 2;
  Real w = Real(1L) / 4 + t / 2;
  return mp::pow2(n) / (n + 1) * bernoulli_poly_real(n + 1, w) + mp::pow(t + half(), n) + mp::pow(t - half(), n);
}

Estimate<Real> za_deriv0(const Real& t, const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) {
    Real two_pi = 2 * mp::pi();
    return -mp::log(two_pi) * t / 2 + mp::log(8 * mp::pi()) / 4 - log_xi_real(half() + t);
  });
}

Estimate<Real> za_deriv0_at_zero_closed(const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) {
    Real num = mp::pow(Real(2L), Real(11L) / 4) * mp::sqrt(mp::pi());
    Real den = mp::gamma(Real(1L) / 4) * mp::abs(mp::zeta(half()));
    return mp::log(num / den);
  });
}

std::vector<Estimate<Real>> za_positive_range(long N, const Real& t, const PrecisionContext& ctx) {
  if (N < 1) throw DomainError("za_positive needs n >= 1");
  Real b;
  {
    PrecisionScope scope(ctx.bits + 64);
    b = half() + t;
  }
  auto s = xi::log_deriv_series(Tag::log_xi, b, N, ctx);
  PrecisionScope scope(s.bits);
  std::vector<Estimate<Real>> out;
  Real rk(1L);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) rk *= s.radius;
    Real v = s.c[n - 1];
    if (n % 2 == 0) v = -v;
    out.push_back({v, s.scaled_error / rk, s.bits});
  }
  return out;
}

Estimate<Real> za_positive(long n, const Real& t, const PrecisionContext& ctx) {
  return za_positive_range(n, t, ctx).back();
}

Estimate<Real> za_fp1(const Real& t, const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) {
    return mp::log(2 * mp::pi()) / 2 + xi::xi_log_deriv(Complex(half() + t)).re();
  });
}

// ---------------------------------------------------------------------------

namespace {

Complex zs_raw(const Complex& s, const Real& t) {
  Real w = Real(5L) / 4 + t / 2;
  if (!(w > 0)) throw DomainError("trivial-zero partner needs t > -5/2");
  return mp::pow(Real(2L), -s) * mp::hurwitz(s, w);
}

}  // namespace

Estimate<Complex> zs_trivial(const Complex& s, const Real& t, const PrecisionContext& ctx) {
  if (s.re() == 1L && mp::is_zero(s.im())) throw PoleError("Z_S has a pole at s = 1");
  return mp::escalate(ctx, [&](const PrecisionContext&) { return zs_raw(s, t); });
}

Rational zs_trivial_rational(long n, const Rational& t) {
  if (n < 0) throw DomainError("zs_trivial_rational needs n >= 0");
  Rational w = Rational(5, 4) + t / 2;
  Rational r = -Rational(mp::BigInt(1) << static_cast<mp_bitcnt_t>(n), n + 1) * mp::bernoulli_poly(n + 1, w);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_mellin_domain(const Complex& s, const Real& t) {
  if (!(t > half())) throw DomainError("the Mellin ray needs t > 1/2");
  if (!(s.re() < 1L)) throw DomainError("the Mellin integral needs Re s < 1");
}

// y^{-s} for y > 0
Complex ypow(const Real& y, const Complex& s) { return mp::exp(-s * mp::log(y)); }

// Split at y0: termwise Taylor integral on [0, y0], exp-sinh on [y0, inf).
Complex j_mellin_raw(const Complex& s, const Real& t, const PrecisionContext& ctx) {
  Bits bits = mp::working_bits();
  Real b = half() + t;
  Real R = xi::max_radius(Tag::log_zeta, b);
  Real r = R / 2;
  Real y0 = mp::min(Real(1L), r / 2);
  double ratio = mp::to_double(R / y0);
  long N = static_cast<long>(std::ceil(static_cast<double>(bits) * std::log(2.0) / std::log(ratio))) + 8;
  auto series = xi::log_deriv_series(Tag::log_zeta, b, N, fixed_at(ctx).with_bits(bits), r);
  Complex taylor(0L);
  Real yk(1L);
  for (long k = 0; k < N; ++k) {
    if (k > 0) yk *= y0;
    taylor += Complex(series.c[k] * yk) / (Complex(k + 1L) - s);
  }
  taylor = taylor * ypow(y0, s - 1L);
  // |zeta'/zeta(x)| < 2^{1-x}: far out the integrand is below working precision
  auto f = [&](const Real& y) {
    Real x = b + y;
    Real log2_size = -x + (-s.re()) * mp::log(y) / mp::ln2();
    if (log2_size < -(bits + 20)) return Complex(0L);
    return xi::zeta_log_deriv(Complex(x)) * ypow(y, s);
  };
  Real tol = mp::pow2(-(bits - 4)) * mp::max(mp::abs(taylor), Real(1L));
  auto q = mp::exp_sinh(f, y0, tol, 16);
  return taylor + q.value;
}

Complex za_continuation_raw(const Complex& s, const Real& t, const PrecisionContext& ctx) {
  Complex sin_pi = mp::sin(s * mp::pi()) / mp::pi();
  return -zs_raw(s, t) + mp::pow(t - half(), -s) + sin_pi * j_mellin_raw(s, t, ctx);
}

bool is_real_integer(const Complex& s) { return mp::is_zero(s.im()) && mp::is_integer(s.re()); }

}  // namespace

Estimate<Complex> j_mellin(const Complex& s, const Real& t, const PrecisionContext& ctx) {
  check_mellin_domain(s, t);
  return mp::escalate(ctx, [&](const PrecisionContext& c) { return j_mellin_raw(s, t, c); });
}

Estimate<Complex> za_continuation(const Complex& s, const Real& t, const PrecisionContext& ctx) {
  check_mellin_domain(s, t);
  if (is_real_integer(s)) {
    // integers go to the closed forms
    PrecisionScope scope(ctx.bits);
    return {Complex(za_negative(-mp::to_long(s.re()), t)), Real(0L), ctx.bits};
  }
  return mp::escalate(ctx, [&](const PrecisionContext& c) { return za_continuation_raw(s, t, c); });
}

Estimate<Real> za_continuation_limit(long k, const Real& t, const PrecisionContext& ctx) {
  if (k > 0) throw DomainError("continuation limits are taken at integers k <= 0");
  if (!(t > half())) throw DomainError("the Mellin ray needs t > 1/2");
  Real trunc;  // set by the last run, which is the one escalate returns
  auto run = [&](const PrecisionContext& c) {
    Bits bits = mp::working_bits();
    Real h = mp::pow2(-(bits / 5));
    auto avg = [&](const Real& hh) {
      Complex p = za_continuation_raw(Complex(Real(k) + hh), t, c);
      Complex m = za_continuation_raw(Complex(Real(k) - hh), t, c);
      return (p.re() + m.re()) / 2;
    };
    Real a1 = avg(h), a2 = avg(h / 2), a3 = avg(h / 4);
    // symmetric averages carry only even powers of h; r1 - r2 ~ the h^4 error of r1
    Real r1 = (4 * a2 - a1) / 3, r2 = (4 * a3 - a2) / 3;
    trunc = mp::abs(r1 - r2);
    return r2;
  };
  auto e = mp::escalate(ctx, run);
  PrecisionScope scope(e.bits);
  e.error += trunc;
  return e;
}

// ---------------------------------------------------------------------------

Rational zb_rational(long m, const Rational& t) {
  if (m < 0) throw DomainError("zb_rational needs m >= 0");
  Rational first = mp::rpow(t * t - Rational(1, 4), m);
  Rational sum = 0;
  Rational two_t = 2 * t;
  for (long j = 0; j <= m; ++j) {
    Rational term = Rational(mp::binomial(m, j) * mp::euler_number(2 * j)) * mp::rpow(two_t, 2 * (m - j));
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  Rational r = first - sum / Rational(mp::BigInt(1) << static_cast<mp_bitcnt_t>(2 * m + 3));
  r.canonicalize();
  return r;
}

Method zb_positive_method(const Real& t) {
  if (mp::is_zero(t)) return Method::z1e_confluence;
  if (mp::abs(t) < mp::pow2(-8)) return Method::xi_derivative;
  return Method::zba_conversion;
}

Estimate<Real> zb_positive_zba(long m, const Real& t, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("zb_positive needs m >= 1");
  if (mp::is_zero(t)) throw DomainError("the conversion formula needs t != 0");
  auto za = za_positive_range(m, t, ctx);
  PrecisionScope scope(za.back().bits);
  Real two_t = 2 * t;
  Real sum, err;
  for (long n = 1; n <= m; ++n) {
    Real w = mp::to_real(mp::binomial(2 * m - n - 1, m - 1)) * mp::pow(two_t, n - 2 * m);
    sum += w * za[n - 1].value;
    err += mp::abs(w) * za[n - 1].error;
  }
  err += mp::abs(sum) * mp::pow2(-(mp::working_bits() - 8));
  return {sum, err, mp::working_bits()};
}

Estimate<Real> zb_positive_z1e(long m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("zb_positive needs m >= 1");
  auto za = za_positive(2 * m, Real(0L), ctx);
  PrecisionScope scope(za.bits);
  Real v = za.value / 2;
  if (m % 2 == 1) v = -v;
  return {v, za.error / 2, za.bits};
}

namespace {

// Taylor coefficients of f(u) = log Xi(1/2 + sqrt(u)) about u0 = t^2, orders 0..m.
std::vector<Real> log_xi_in_t2(long m, const Real& t, const PrecisionContext& ctx) {
  namespace S = mp::series;
  Real at = mp::abs(t);
  if (at < mp::pow2(-8)) {
    // even series about 1/2, then shift u -> u0 + w
    long J = m + 12;
    auto s = xi::log_deriv_series(Tag::log_xi, half(), 2 * J, ctx);
    PrecisionScope scope(s.bits);
    std::vector<Real> e(static_cast<size_t>(J) + 1);
    for (long j = 1; j <= J; ++j) e[j] = s.c[2 * j - 1] / (2 * j);
    Real u0 = mp::sqr(at);
    std::vector<Real> out(static_cast<size_t>(m) + 1);
    for (long k = 1; k <= m; ++k) {
      Real sum, up(1L);
      for (long j = k; j <= J; ++j) {
        sum += mp::to_real(mp::binomial(j, k)) * e[j] * up;
        up *= u0;
      }
      out[k] = sum;
    }
    return out;
  }
  Real b;
  {
    PrecisionScope scope(ctx.bits + 64);
    b = half() + at;
  }
  auto s = xi::log_deriv_series(Tag::log_xi, b, m, ctx);
  PrecisionScope scope(s.bits);
  // a_k = coefficient of y^k in log Xi(1/2 + t + y), k >= 1
  S::Series<Real> a(static_cast<size_t>(m) + 1, Real(0L));
  for (long k = 1; k <= m; ++k) a[k] = s.c[k - 1] / k;
  // y(w) = t[(1 + w/t^2)^{1/2} - 1] with w = (t + y)^2 - t^2
  S::Series<Real> g(static_cast<size_t>(m) + 1, Real(0L));
  if (m >= 1) g[1] = 1L / mp::sqr(at);
  S::Series<Real> y = S::pow1(g, half());
  y[0] = Real(0L);
  for (auto& c : y) c = c * at;
  return S::compose(a, y);
}

}  // namespace

Estimate<Real> zb_positive_t2(long m, const Real& t, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("zb_positive needs m >= 1");
  auto run = [&](const PrecisionContext& c) {
    auto coeffs = log_xi_in_t2(m, t, fixed_at(c));
    Real v = coeffs[m] * m;
    if (m % 2 == 0) v = -v;
    return v;
  };
  return mp::escalate(ctx, run);
}

Estimate<Real> zb_positive(long m, const Real& t, const PrecisionContext& ctx) {
  switch (zb_positive_method(t)) {
    case Method::z1e_confluence: return zb_positive_z1e(m, ctx);
    case Method::xi_derivative: return zb_positive_t2(m, t, ctx);
    default: return zb_positive_zba(m, t, ctx);
  }
}

Estimate<Real> zb_deriv0(const Real& t, const PrecisionContext& ctx) {
  return mp::escalate(ctx, [&](const PrecisionContext&) {
    return mp::log(8 * mp::pi()) / 4 - log_xi_real(half() + t);
  });
}

PoleFit zb_pole_probe(const std::vector<Real>& eps, const zeros::ZeroSet& set, const Real& t,
                      const PrecisionContext& ctx) {
  std::vector<Real> distinct;
  for (const auto& e : eps) {
    if (!(e > 0) || e > Real(1L) / 5) throw DomainError("pole probe offsets must lie in (0, 0.2]");
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == e;
    if (!seen) distinct.push_back(e);
  }
  if (distinct.size() < 4) throw DomainError("pole probe needs at least 4 distinct offsets");
  PrecisionScope scope(ctx.bits);
  const size_t n = distinct.size();
  std::vector<Real> y(n), yerr(n);
  for (size_t i = 0; i < n; ++i) {
    auto kind = zeros::SumKind::zb(Complex(half() + distinct[i]), t);
    auto r = zeros::zero_sum(kind, set, true, ctx);
    y[i] = r.value.re();
    yerr[i] = r.error;
  }
  // normal equations for the basis (eps^-2, eps^-1, 1)
  auto basis = [&](size_t i, int j) { return j == 0 ? 1L / mp::sqr(distinct[i]) : j == 1 ? 1L / distinct[i] : Real(1L); };
  Real A[3][3], rhs[3];
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      Real s;
      for (size_t i = 0; i < n; ++i) s += basis(i, j) * basis(i, k);
      A[j][k] = s;
    }
    Real s;
    for (size_t i = 0; i < n; ++i) s += basis(i, j) * y[i];
    rhs[j] = s;
  }
  // inverse of the 3x3 normal matrix by cofactors
  Real det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
             A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  if (mp::is_zero(det)) throw ConvergenceError("pole fit is singular");
  Real inv[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      inv[r][c] = (A[r1][c1] * A[r2][c2] - A[r1][c2] * A[r2][c1]) / det;
    }
  Real coef[3];
  for (int r = 0; r < 3; ++r) coef[r] = inv[r][0] * rhs[0] + inv[r][1] * rhs[1] + inv[r][2] * rhs[2];
  Real rss;
  for (size_t i = 0; i < n; ++i) rss += mp::sqr(y[i] - coef[0] * basis(i, 0) - coef[1] * basis(i, 1) - coef[2]);
  Real sigma2 = n > 3 ? rss / static_cast<long>(n - 3) : Real(0L);
  PoleFit fit;
  fit.a = coef[0];
  fit.b = coef[1];
  fit.c = coef[2];
  // scatter plus worst-case propagation of the summation errors through (X^T X)^{-1} X^T
  for (int r = 0; r < 2; ++r) {
    Real prop;
    for (size_t i = 0; i < n; ++i) {
      Real w = inv[r][0] * basis(i, 0) + inv[r][1] * basis(i, 1) + inv[r][2] * basis(i, 2);
      prop += mp::abs(w) * yerr[i];
    }
    Real e = mp::sqrt(sigma2 * inv[r][r]) + prop;
    (r == 0 ? fit.a_error : fit.b_error) = e;
  }
  return fit;
}

// ---------------------------------------------------------------------------

Estimate<Complex> zc_values(const Complex& s, const Real& tau, const zeros::ZeroSet& set, const PrecisionContext& ctx) {
  if (!(s.re() > 1L)) throw DomainError("the third-kind series needs Re s > 1");
  if (tau < 0) throw DomainError("the third-kind shift must be >= 0");
  return zeros::zero_sum(zeros::SumKind::zc(s, tau), set, set.complete_below > 0, ctx);
}

Real zc_fp0(const Real& tau) {
  Real two_pi = 2 * mp::pi();
  return Real(7L) / 8 + mp::log(two_pi) / two_pi * tau;
}

// ---------------------------------------------------------------------------

namespace {

SpecialValue exact_row(Family f, Quantity q, long s, const Rational& t, const Rational& v) {
  SpecialValue sv;
  sv.family = f;
  sv.quantity = q;
  sv.argument = s;
  sv.shift = t;
  sv.payload = v;
  sv.method = Method::table_closed_form;
  sv.error = Real(0L);
  return sv;
}

SpecialValue real_row(Family f, Quantity q, long s, const Rational& t, const Estimate<Real>& v, Method m) {
  SpecialValue sv;
  sv.family = f;
  sv.quantity = q;
  sv.argument = s;
  sv.shift = t;
  sv.payload = Complex(v.value);
  sv.method = m;
  sv.error = v.error;
  return sv;
}

SpecialValue complex_row(Family f, Quantity q, long s, const Rational& t, const Estimate<Complex>& v, Method m) {
  SpecialValue sv = real_row(f, q, s, t, {v.value.re(), v.error, v.bits}, m);
  sv.payload = v.value;
  return sv;
}

}  // namespace

std::vector<SpecialValue> table_column(Family family, const Rational& t, long smin, long smax,
                                       const PrecisionContext& ctx, const zeros::ZeroSet* set) {
  if (smin > smax) throw DomainError("empty argument range");
  PrecisionScope scope(ctx.bits);
  Real tr = mp::to_real(t);
  std::vector<SpecialValue> rows;
  for (long s = smin; s <= smax; ++s) {
    switch (family) {
      case Family::ZA:
        if (s <= 0) rows.push_back(exact_row(family, Quantity::value, s, t, za_rational(-s, t)));
        if (s == 0) rows.push_back(real_row(family, Quantity::deriv0, s, t, za_deriv0(tr, ctx), Method::xi_derivative));
        if (s >= 1) rows.push_back(real_row(family, Quantity::value, s, t, za_positive(s, tr, ctx), Method::xi_derivative));
        if (s == 1)
          rows.push_back(real_row(family, Quantity::finite_part, s, t, za_fp1(tr, ctx), Method::xi_derivative));
        break;
      case Family::ZB:
        if (s <= 0) rows.push_back(exact_row(family, Quantity::value, s, t, zb_rational(-s, t)));
        if (s == 0) rows.push_back(real_row(family, Quantity::deriv0, s, t, zb_deriv0(tr, ctx), Method::xi_derivative));
        if (s >= 1)
          rows.push_back(real_row(family, Quantity::value, s, t, zb_positive(s, tr, ctx), zb_positive_method(tr)));
        break;
      case Family::ZC:
        if (s == 0) {
          if (t == 0) rows.push_back(exact_row(family, Quantity::finite_part, s, t, Rational(7, 8)));
          else rows.push_back(real_row(family, Quantity::finite_part, s, t, {zc_fp0(tr), mp::pow2(-(ctx.bits - 8)), ctx.bits},
                                       Method::numeric_closed_form));
        }
        if (s >= 2 && set != nullptr)
          rows.push_back(complex_row(family, Quantity::value, s, t, zc_values(Complex(Real(s)), tr, *set, ctx),
                                     Method::zero_sum));
        break;
      case Family::ZS:
        if (s <= 0) rows.push_back(exact_row(family, Quantity::value, s, t, zs_trivial_rational(-s, t)));
        if (s >= 2)
          rows.push_back(complex_row(family, Quantity::value, s, t, zs_trivial(Complex(Real(s)), tr, ctx),
                                     Method::numeric_closed_form));
        break;
      case Family::hurwitz: {
        if (!(t > 0)) throw DomainError("Hurwitz zeta needs w > 0");
        if (s <= 0) {
          Rational v = -mp::bernoulli_poly(1 - s, t) / Rational(1 - s);
          v.canonicalize();
          rows.push_back(exact_row(family, Quantity::value, s, t, v));
        }
        if (s == 0) {
          auto d = mp::escalate(ctx, [&](const PrecisionContext&) {
            return mp::log_gamma(mp::to_real(t)) - mp::log(2 * mp::pi()) / 2;
          });
          rows.push_back(real_row(family, Quantity::deriv0, s, t, d, Method::numeric_closed_form));
        }
        if (s == 1) {
          auto fp = mp::escalate(ctx, [&](const PrecisionContext&) { return mp::hurwitz_fp1(mp::to_real(t)); });
          rows.push_back(real_row(family, Quantity::finite_part, s, t, fp, Method::numeric_closed_form));
        }
        if (s >= 2)
          rows.push_back(complex_row(family, Quantity::value, s, t,
                                     mp::hurwitz_zeta(Complex(Real(s)), mp::to_real(t), 0, ctx),
                                     Method::numeric_closed_form));
        break;
      }
    }
  }
  return rows;
}

}  // namespace szeta::superzeta
