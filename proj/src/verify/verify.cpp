#include "szeta/verify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "szeta/errors.hpp"
#include "szeta/keiper_li/keiper_li.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/mp/stieltjes.hpp"
#include "szeta/superzeta/superzeta.hpp"
#include "szeta/xi/xi.hpp"

namespace szeta::verify {

namespace {

using mp::Complex;
using mp::PrecisionContext;
using mp::PrecisionScope;
using mp::Rational;
using mp::Real;
using xi::Tag;
namespace sz = superzeta;
namespace kl = keiper_li;

Real half() { return Real(1L) / 2; }
Real tenth_pow(long d) { return mp::pow(Real(10L), -d); }
std::string str(const Real& x, int digits = 6) { return mp::to_string(x, digits); }
std::string q(const Rational& r) { return mp::to_string(r); }

// Collects the result of one invariant: the first failure wins the detail.
class Item {
 public:
  explicit Item(std::string name) : name_(std::move(name)) {}
  void fail(const std::string& why) {
    if (pass_) detail_ = why;
    pass_ = false;
  }
  void note(const std::string& s) {
    if (pass_) detail_ = s;
  }
  CheckResult done() const { return {name_, pass_, detail_}; }

 private:
  std::string name_;
  bool pass_ = true;
  std::string detail_;
};

// |a - b| <= tol, recording the worst gap in the note
void expect_close(Item& it, const std::string& what, const Real& a, const Real& b, const Real& tol) {
  Real d = mp::abs(a - b);
  if (!(d <= tol)) it.fail(what + ": |" + str(a, 20) + " - " + str(b, 20) + "| = " + str(d, 3) + " > " + str(tol, 3));
}

void expect_eq(Item& it, const std::string& what, const Rational& a, const Rational& b) {
  if (a != b) it.fail(what + ": " + q(a) + " != " + q(b));
}

Real rel_tol(const PrecisionContext& ctx, const Real& scale) {
  return tenth_pow(ctx.digits()) * mp::max(mp::abs(scale), Real(1L));
}

// ---------------------------------------------------------------------------
// tables

CheckResult exact_numbers() {
  Item it("Bernoulli and Euler numbers are exact");
  const char* b[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"};
  for (long n = 0; n <= 12; ++n)
    expect_eq(it, "B_" + std::to_string(n), mp::bernoulli_number(n), mp::parse_rational(b[n]));
  const long e[] = {1, -1, 5, -61, 1385, -50521, 2702765};
  for (long n = 0; n <= 6; ++n)
    if (mp::euler_number(2 * n) != e[n]) it.fail("E_" + std::to_string(2 * n));
  Rational x = mp::parse_rational("3/7");
  expect_eq(it, "B_3(3/7)", mp::bernoulli_poly(3, x), x * x * x - Rational(3, 2) * x * x + x / 2);
  return it.done();
}

CheckResult hurwitz_rows(const PrecisionContext& ctx) {
  Item it("Hurwitz values at non-positive integers equal -B_{n+1}(w)/(n+1)");
  PrecisionScope scope(ctx.bits);
  for (const char* ws : {"1/4", "1/2", "1", "5/4"}) {
    Rational w = mp::parse_rational(ws);
    for (long n = 0; n <= 8; ++n) {
      Rational exact = -mp::bernoulli_poly(n + 1, w) / Rational(n + 1);
      auto v = mp::hurwitz_zeta(Complex(Real(-n)), mp::to_real(w), 0, ctx);
      Real e = mp::to_real(exact);
      expect_close(it, "zeta(-" + std::to_string(n) + ", " + ws + ")", v.value.re(), e, rel_tol(ctx, e));
    }
  }
  return it.done();
}

// rows of the first-kind table at t = 0 and t = 1/2 written out independently
Rational za0_row(long n) {
  if (n % 2 == 0) return mp::rpow(Rational(2), 1 - n) * (Rational(1) - Rational(mp::euler_number(n)) / 8);
  return -Rational(1, 2) * (Rational(1) - mp::rpow(Rational(2), -n)) * mp::bernoulli_number(n + 1) / Rational(n + 1);
}

Rational za_half_row(long n) {
  if (n == 0) return Rational(2);
  return Rational(1) - (mp::rpow(Rational(2), n) - 1) * mp::bernoulli_number(n + 1) / Rational(n + 1);
}

Rational zb_half_row(long m) {
  if (m == 0) return Rational(7, 8);
  Rational s;
  for (long j = 0; j <= m; ++j) {
    Rational term = Rational(mp::binomial(m, j)) * Rational(mp::euler_number(2 * j));
    s += (j % 2 ? -term : term);
  }
  return -mp::rpow(Rational(2), -2 * m - 3) * s;
}

CheckResult rational_cross_consistency() {
  Item it("rational tables specialize exactly at t = 0 and t = 1/2");
  Rational zero(0), h(1, 2);
  for (long n = 0; n <= 8; ++n) {
    expect_eq(it, "Z_A(-" + std::to_string(n) + "|0)", sz::za_rational(n, zero), za0_row(n));
    expect_eq(it, "Z_A(-" + std::to_string(n) + "|1/2)", sz::za_rational(n, h), za_half_row(n));
    expect_eq(it, "Z_B(-" + std::to_string(n) + "|1/2)", sz::zb_rational(n, h), zb_half_row(n));
    Rational z1e = Rational(1, 2) * sz::za_rational(2 * n, zero);
    if (n % 2) z1e = -z1e;
    expect_eq(it, "Z_B(-" + std::to_string(n) + "|0) confluent", sz::zb_rational(n, zero), z1e);
  }
  return it.done();
}

CheckResult reflection_imprint() {
  Item it("Z_A(-n|-t) = (-1)^n Z_A(-n|t) + B_{n+1}(1/2 - t)/(n+1)");
  for (const char* ts : {"0", "1/2", "1/3", "-3/4", "2", "7/5"}) {
    Rational t = mp::parse_rational(ts);
    for (long n = 0; n <= 6; ++n) {
      Rational rhs = sz::za_rational(n, t);
      if (n % 2) rhs = -rhs;
      rhs += mp::bernoulli_poly(n + 1, Rational(1, 2) - t) / Rational(n + 1);
      expect_eq(it, "n=" + std::to_string(n) + " t=" + ts, sz::za_rational(n, -t), rhs);
    }
  }
  return it.done();
}

CheckResult headline_values() {
  Item it("printed rational special values");
  Rational zero(0), h(1, 2);
  expect_eq(it, "Z_A(0|0)", sz::za_rational(0, zero), Rational(7, 4));
  expect_eq(it, "Z_A(0|1/2)", sz::za_rational(0, h), Rational(2));
  for (const char* ts : {"0", "1/2", "3", "-5/3"})
    expect_eq(it, std::string("Z_B(0|") + ts + ")", sz::zb_rational(0, mp::parse_rational(ts)), Rational(7, 8));
  expect_eq(it, "Z_A(-1|0)", sz::za_rational(1, zero), Rational(-1, 48));
  expect_eq(it, "Z_A(-2|0)", sz::za_rational(2, zero), Rational(9, 16));
  expect_eq(it, "Z_A(-1|1/2)", sz::za_rational(1, h), Rational(11, 12));
  expect_eq(it, "Z_B(-1|1/2)", sz::zb_rational(1, h), Rational(-1, 16));
  expect_eq(it, "Z_B(-1|0)", sz::zb_rational(1, zero), Rational(-9, 32));
  return it.done();
}

CheckResult trivial_partner(const PrecisionContext& ctx) {
  Item it("trivial-zero partner splits the first-kind rationals");
  PrecisionScope scope(ctx.bits);
  for (const char* ts : {"0", "1/2", "1", "5/2"}) {
    Rational t = mp::parse_rational(ts);
    for (long n = 0; n <= 6; ++n) {
      Rational zs = sz::zs_trivial_rational(n, t);
      // Z_A(-n|t) = -Z_S(-n|t) + (t - 1/2)^n
      expect_eq(it, "n=" + std::to_string(n) + " t=" + ts, sz::za_rational(n, t),
                -zs + mp::rpow(t - Rational(1, 2), n));
      auto v = sz::zs_trivial(Complex(Real(-n)), mp::to_real(t), ctx);
      Real e = mp::to_real(zs);
      expect_close(it, "Z_S numeric n=" + std::to_string(n) + " t=" + ts, v.value.re(), e,
                   rel_tol(ctx, e) + v.error);
    }
  }
  return it.done();
}

CheckResult exact_cells(const PrecisionContext& ctx) {
  Item it("rational table cells are emitted exactly");
  for (auto f : {sz::Family::ZA, sz::Family::ZB, sz::Family::ZC, sz::Family::ZS, sz::Family::hurwitz}) {
    for (const char* ts : {"0", "1/2"}) {
      Rational t = mp::parse_rational(ts);
      if (f == sz::Family::hurwitz && t == 0) t = Rational(1, 4);
      auto rows = sz::table_column(f, t, -4, 3, ctx);
      for (const auto& r : rows) {
        std::string where = sz::to_string(f) + " s=" + std::to_string(r.argument) + " t=" + ts;
        bool closed = r.method == sz::Method::table_closed_form;
        if (r.exact() != closed) it.fail(where + ": exact payload and method disagree");
        if (r.quantity == sz::Quantity::value && r.argument <= 0 && !r.exact()) it.fail(where + " is not exact");
        if (!r.exact() && !mp::is_finite(r.error)) it.fail(where + ": no finite error");
      }
    }
  }
  auto rows = sz::table_column(sz::Family::ZA, Rational(1, 2), -4, 4, ctx);
  bool found = false;
  for (const auto& r : rows)
    if (r.quantity == sz::Quantity::value && r.argument == 0) {
      found = true;
      if (r.payload_string(20) != "2") it.fail("Z_A(0|1/2) printed as " + r.payload_string(20));
    }
  if (!found) it.fail("no s = 0 row");
  return it.done();
}

// ---------------------------------------------------------------------------
// identities

CheckResult determinant(const PrecisionContext& ctx) {
  Item it("exp(-d/ds zeta(s,w) at 0) = sqrt(2 pi)/Gamma(w)");
  PrecisionScope scope(ctx.bits);
  for (const char* ws : {"1/4", "1", "3/2"}) {
    Real w = Real::parse(ws);
    auto d = mp::hurwitz_zeta(Complex(0L), w, 1, ctx);
    Real lhs = mp::exp(-d.value.re());
    Real rhs = mp::sqrt(2 * mp::pi()) / mp::gamma(w);
    expect_close(it, std::string("w=") + ws, lhs, rhs, rel_tol(ctx, rhs));
  }
  return it.done();
}

// F(u, y) = sum_{n>=1} u^n n^{-y}, |u| = 1, u != 1: direct terms, then the
// Euler transform sum_j u^N/(1-u) (u/(1-u))^j Delta^j f(N) for the rest.
Complex lerch(const Complex& u, const Real& y, long N, long J) {
  Complex sum(0L), un(1L);
  for (long n = 1; n < N; ++n) {
    un = un * u;
    sum += un * mp::exp(-y * mp::log(Real(n)));
  }
  un = un * u;  // u^N
  std::vector<Real> d;
  for (long i = 0; i <= J; ++i) d.push_back(mp::exp(-y * mp::log(Real(N + i))));
  Complex inv = mp::reciprocal(Complex(1L) - u);
  Complex ratio = u * inv, p = un * inv, tail(0L);
  for (long j = 0; j <= J; ++j) {
    tail += p * d[0];
    p = p * ratio;
    for (long i = 0; i + 1 < static_cast<long>(d.size()); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return sum + tail;
}

CheckResult jonquiere(const PrecisionContext& ctx) {
  Item it("Hurwitz zeta matches the Lerch-series form at x = -0.7, w = 0.3");
  Real lhs;
  {
    PrecisionScope scope(ctx.bits);
    lhs = mp::hurwitz_zeta(Complex(Real::parse("-0.7")), Real::parse("0.3"), 0, ctx).value.re();
  }
  PrecisionScope scope(ctx.bits + 256);
  Real x = Real::parse("-0.7"), w = Real::parse("0.3");
  Complex u = mp::expi(2 * mp::pi() * w);
  Complex F = lerch(u, 1L - x, 120, 160);
  Complex e = mp::expi(mp::pi() * x / 2);
  Real rhs = 2 * mp::gamma(1L - x) / mp::pow(2 * mp::pi(), 1L - x) * (e * F).im();
  PrecisionScope back(ctx.bits);
  expect_close(it, "zeta(-0.7, 0.3)", lhs, rhs, rel_tol(ctx, rhs));
  return it.done();
}

CheckResult precision_monotonicity(const PrecisionContext& ctx) {
  Item it("rerunning at bits+64 moves results by less than their error bound");
  PrecisionContext lo = ctx, hi = ctx.with_bits(ctx.bits + 64);
  lo.escalation = hi.escalation = mp::Escalation::fixed;
  PrecisionScope scope(ctx.bits + 64);
  Complex s(Real::parse("0.3"), Real(2L));
  Real w = Real::parse("0.7");
  auto cmp = [&](const std::string& what, const Complex& a, const Complex& b, const Real& err) {
    Real d = mp::abs(a - b);
    if (!(d <= err)) it.fail(what + ": moved " + str(d, 3) + " > bound " + str(err, 3));
  };
  {
    auto a = mp::hurwitz_zeta(s, w, 0, lo), b = mp::hurwitz_zeta(s, w, 0, hi);
    cmp("hurwitz_zeta", a.value, b.value, a.error);
  }
  {
    auto a = mp::polygamma(2, w, lo), b = mp::polygamma(2, w, hi);
    cmp("polygamma", a.value, b.value, a.error);
  }
  {
    auto a = xi::xi(s, lo), b = xi::xi(s, hi);
    cmp("xi", a.value, b.value, a.error);
  }
  {
    auto a = sz::za_positive(3, Real::parse("0.3"), lo), b = sz::za_positive(3, Real::parse("0.3"), hi);
    cmp("za_positive", a.value, b.value, a.error);
  }
  {
    auto a = sz::zb_deriv0(Real(1L), lo), b = sz::zb_deriv0(Real(1L), hi);
    cmp("zb_deriv0", a.value, b.value, a.error);
  }
  return it.done();
}

CheckResult xi_symmetry(const PrecisionContext& ctx) {
  Item it("(log Xi)^(n)(1/2+t) = (-1)^n (log Xi)^(n)(1/2-t)");
  PrecisionScope scope(ctx.bits);
  Real t = Real::parse("0.3");
  auto p = xi::log_deriv_series(Tag::log_xi, half() + t, 12, ctx);
  auto m = xi::log_deriv_series(Tag::log_xi, half() - t, 12, ctx);
  for (long n = 1; n <= 12; ++n) {
    Real a = p.derivative(n), b = m.derivative(n);
    if (n % 2) b = -b;
    expect_close(it, "n=" + std::to_string(n), a, b,
                 rel_tol(ctx, a) + p.derivative_error(n) + m.derivative_error(n));
  }
  return it.done();
}

CheckResult decomposition(const PrecisionContext& ctx) {
  Item it("log Xi derivatives split into elementary parts plus log zeta");
  PrecisionScope scope(ctx.bits);
  Real b(3L);
  b /= 2;
  auto lx = xi::log_deriv_series(Tag::log_xi, b, 6, ctx);
  auto lz = xi::log_deriv_series(Tag::log_zeta, b, 6, ctx);
  for (long n = 1; n <= 6; ++n) {
    Real fact = mp::to_real(mp::factorial(n - 1));
    Real sgn(n % 2 ? 1L : -1L);
    Real parts = sgn * fact * (mp::pow(b, -n) + mp::pow(b - 1L, -n));
    if (n == 1) parts -= mp::log(mp::pi()) / 2;
    Real pg = n == 1 ? mp::digamma(b / 2) : mp::polygamma(static_cast<int>(n - 1), b / 2);
    parts += pg * mp::pow2(-n);
    parts += lz.derivative(n);
    expect_close(it, "n=" + std::to_string(n), lx.derivative(n), parts,
                 rel_tol(ctx, parts) + lx.derivative_error(n) + lz.derivative_error(n));
  }
  return it.done();
}

CheckResult taylor_round_trip(const PrecisionContext& ctx) {
  Item it("Taylor series of log Xi at 1/2 reproduces log Xi(0.7)");
  PrecisionScope scope(ctx.bits);
  auto s = xi::log_deriv_series(Tag::log_xi, half(), 24, ctx);
  Real y = Real::parse("0.2");
  Real sum = mp::log(xi::xi(Complex(half())).re()), yp(1L), err;
  for (long n = 1; n <= 24; ++n) {
    yp *= y;
    sum += s.taylor(n) * yp;
    err += s.derivative_error(n) / mp::to_real(mp::factorial(n)) * yp;
  }
  Real direct = mp::log(xi::xi(Complex(half() + y)).re());
  // the first omitted term is below (0.2/14)^25
  expect_close(it, "log Xi(0.7)", sum, direct, rel_tol(ctx, direct) + err);
  return it.done();
}

CheckResult radius_robustness(const PrecisionContext& ctx) {
  Item it("Cauchy radii 3 and 5 give the same derivatives");
  PrecisionScope scope(ctx.bits);
  auto a = xi::log_deriv_series(Tag::log_xi, half(), 20, ctx, Real(3L));
  auto b = xi::log_deriv_series(Tag::log_xi, half(), 20, ctx, Real(5L));
  for (long n = 1; n <= 20; ++n) {
    Real tol = a.derivative_error(n) + b.derivative_error(n) + rel_tol(ctx, a.derivative(n)) * mp::pow2(-20);
    expect_close(it, "n=" + std::to_string(n), a.derivative(n), b.derivative(n), tol);
  }
  return it.done();
}

CheckResult parity_imprint(const PrecisionContext& ctx) {
  Item it("Z_A(n|-t) = (-1)^n Z_A(n|t)");
  PrecisionScope scope(ctx.bits);
  Real t = Real::parse("0.3");
  auto p = sz::za_positive_range(6, t, ctx);
  auto m = sz::za_positive_range(6, -t, ctx);
  for (long n = 1; n <= 6; ++n) {
    Real b = m[n - 1].value;
    if (n % 2) b = -b;
    expect_close(it, "n=" + std::to_string(n), p[n - 1].value, b,
                 rel_tol(ctx, b) + p[n - 1].error + m[n - 1].error);
  }
  return it.done();
}

// every |1/2 + t - rho| is at least the first ordinate, so d = 14 bounds the
// remainders from below; sum_rho |1/2 + t - rho|^-2 <= 2 Z_B(1|0) < 0.05
const long kMinDistance = 14;

CheckResult odd_sum_identity(const PrecisionContext& ctx) {
  Item it("sum_k C(k-1,n-1) t^(k-n) Z_A(k|t) vanishes for odd n");
  PrecisionContext c = ctx.with_bits(std::max<mp::Bits>(ctx.bits, 384));
  PrecisionScope scope(c.bits);
  const long K = 30;
  Real t = Real::parse("0.1");
  auto za = sz::za_positive_range(K, t, c);
  Real d(kMinDistance), r = t / d;
  for (long n : {1L, 3L}) {
    Real sum, err, tp(1L);
    for (long k = n; k <= K; ++k) {
      Real coef = mp::to_real(mp::binomial(k - 1, n - 1)) * tp;
      sum += coef * za[k - 1].value;
      err += coef * (za[k - 1].error + mp::abs(za[k - 1].value) * mp::pow2(-(c.bits - 8)));
      tp *= t;
    }
    Real C = Real::parse("0.05") * mp::pow(d, 2 - n) * mp::to_real(mp::binomial(K, n - 1)) *
             mp::pow(d, -(K + 1 - n)) / (1L - 2 * r);
    Real bound = C * mp::pow(t, K - n + 1);
    if (!(mp::abs(sum) <= bound + err))
      it.fail("n=" + std::to_string(n) + ": |sum| = " + str(mp::abs(sum), 3) + " > " + str(bound + err, 3));
    else
      it.note("n=" + std::to_string(n) + " |sum| " + str(mp::abs(sum), 3) + " <= " + str(bound + err, 3));
  }
  return it.done();
}

CheckResult generating_function(const PrecisionContext& ctx) {
  Item it("Xi'/Xi(1/2+t+y) = sum_n Z_A(n|t) (-y)^(n-1)");
  PrecisionScope scope(ctx.bits);
  const long N = 20;
  Real t = half(), y = Real::parse("0.05"), d(kMinDistance);
  auto za = sz::za_positive_range(N, t, ctx);
  Real sum, err, yp(1L);
  for (long n = 1; n <= N; ++n) {
    sum += (n % 2 ? za[n - 1].value : -za[n - 1].value) * yp;
    err += za[n - 1].error * yp;
    yp *= y;
  }
  Real ratio = y / d;
  Real trunc = Real::parse("0.05") * d * d / y * mp::pow(ratio, N + 1) / (1L - ratio);
  Real direct = xi::xi_log_deriv(Complex(half() + t + y)).re();
  expect_close(it, "t=1/2 y=0.05", sum, direct, trunc + err + rel_tol(ctx, direct));
  return it.done();
}

CheckResult zba_identity(const PrecisionContext& ctx) {
  Item it("Z_B(m|t) by conversion from Z_A equals the d/d(t^2) route");
  PrecisionScope scope(ctx.bits);
  for (const char* ts : {"0.5", "1", "1.5"}) {
    Real t = Real::parse(ts);
    for (long m = 1; m <= 8; ++m) {
      auto a = sz::zb_positive_zba(m, t, ctx);
      auto b = sz::zb_positive_t2(m, t, ctx);
      expect_close(it, "m=" + std::to_string(m) + " t=" + ts, a.value, b.value,
                   rel_tol(ctx, a.value) + a.error + b.error);
    }
  }
  return it.done();
}

CheckResult confluent_routes(const PrecisionContext& ctx) {
  Item it("confluent Z_B_0(m) = (-1)^m Z_A_0(2m)/2 matches the even-series route");
  PrecisionScope scope(ctx.bits);
  for (long m = 1; m <= 8; ++m) {
    auto a = sz::zb_positive_z1e(m, ctx);
    auto b = sz::zb_positive_t2(m, Real(0L), ctx);
    expect_close(it, "m=" + std::to_string(m), a.value, b.value, rel_tol(ctx, a.value) + a.error + b.error);
  }
  // near t = 0 the conversion route must agree with the small-t route as well
  Real t = mp::pow2(-6);
  for (long m = 1; m <= 4; ++m) {
    auto a = sz::zb_positive_zba(m, t, ctx);
    auto b = sz::zb_positive_t2(m, t, ctx);
    Real tol = mp::max(mp::abs(b.value), Real(1L)) * tenth_pow(12) + a.error + b.error;
    expect_close(it, "t=2^-6 m=" + std::to_string(m), a.value, b.value, tol);
  }
  return it.done();
}

CheckResult transcendental_routes(const PrecisionContext& ctx) {
  Item it("transcendental special values agree across routes");
  PrecisionScope scope(ctx.bits);
  Real pi = mp::pi(), g = mp::euler_gamma();
  auto check = [&](const std::string& what, const mp::Estimate<Real>& v, const Real& expected) {
    expect_close(it, what, v.value, expected, rel_tol(ctx, expected) + v.error);
  };
  auto closed = sz::za_deriv0_at_zero_closed(ctx);
  check("Z_A'(0|0) two routes", sz::za_deriv0(Real(0L), ctx), closed.value);
  check("Z_A'(0|1/2)", sz::za_deriv0(half(), ctx), mp::log(Real(2L)) / 2);
  check("Z_B'(0|1/2)", sz::zb_deriv0(half(), ctx), mp::log(8 * pi) / 4);
  check("Z_B'(0|0) = Z_A'(0|0)", sz::zb_deriv0(Real(0L), ctx), closed.value);
  check("FP Z_A(1|0)", sz::za_fp1(Real(0L), ctx), mp::log(2 * pi) / 2);
  check("FP Z_A(1|1/2)", sz::za_fp1(half(), ctx), 1L - mp::log(Real(2L)) / 2 + g / 2);
  check("Z_A(1|1/2)", sz::za_positive(1, half(), ctx), 1L - mp::log(4 * pi) / 2 + g / 2);
  for (long n : {1L, 3L, 5L}) {
    auto v = sz::za_positive(n, Real(0L), ctx);
    if (!(mp::abs(v.value) <= v.error + tenth_pow(ctx.digits())))
      it.fail("Z_A(" + std::to_string(n) + "|0) = " + str(v.value, 3) + " is not 0");
  }
  // t = 0, even n: 2^{n+1} - [(2^n - 1) zeta(n) + 2^n beta(n)]/2 - (log|zeta|)^(n)(1/2)/(n-1)!
  auto lz = xi::log_deriv_series(Tag::log_abs_zeta, half(), 6, ctx);
  for (long n : {2L, 4L, 6L}) {
    Real two_n = mp::pow2(n);
    Real z = mp::zeta(Real(n)), be = mp::dirichlet_beta(Complex(Real(n))).re();
    Real e = 2 * two_n - ((two_n - 1L) * z + two_n * be) / 2 - lz.derivative(n) / mp::to_real(mp::factorial(n - 1));
    auto v = sz::za_positive(n, Real(0L), ctx);
    expect_close(it, "Z_A(" + std::to_string(n) + "|0) closed form", v.value, e,
                 rel_tol(ctx, e) + v.error + lz.derivative_error(n));
  }
  // t = 1/2: 1 - (1 - 2^-n) zeta(n) + g_n^c/(n-1)!
  auto gc = mp::stieltjes_cumulants(6);
  for (long n = 2; n <= 6; ++n) {
    Real e = 1L - (1L - mp::pow2(-n)) * mp::zeta(Real(n)) + gc[n - 1] / mp::to_real(mp::factorial(n - 1));
    auto v = sz::za_positive(n, half(), ctx);
    expect_close(it, "Z_A(" + std::to_string(n) + "|1/2) from cumulants", v.value, e, rel_tol(ctx, e) + v.error);
  }
  return it.done();
}

CheckResult quadruple_closure(const zeros::ZeroSet& set, const std::string& label) {
  Item it("zero set is closed under rho -> 1-rho and rho -> conj(rho) (" + label + ")");
  auto rhos = set.rhos();
  std::vector<Complex> refl, conj;
  for (const auto& r : rhos) {
    refl.push_back(Complex(1L) - r);
    conj.push_back(mp::conj(r));
  }
  std::string base = zeros::canonical_form(rhos, 25);
  if (zeros::canonical_form(refl, 25) != base) it.fail("1 - rho is not a permutation");
  if (zeros::canonical_form(conj, 25) != base) it.fail("conj rho is not a permutation");
  return it.done();
}

CheckResult lambda_one_sums(const zeros::ZeroSet& set, const PrecisionContext& ctx) {
  Item it("lambda_1 and lambda_1^0 are the second-kind sums at sigma = 1");
  PrecisionScope scope(ctx.bits);
  auto rel = [&](const std::string& what, const mp::Estimate<Complex>& a, const mp::Estimate<Complex>& b) {
    Real tol = mp::abs(b.value) * mp::pow2(-(ctx.bits - 24));
    expect_close(it, what, a.value.re(), b.value.re(), tol);
    if (!mp::is_zero(a.value.im()) && mp::abs(a.value.im()) > tol) it.fail(what + ": imaginary residue");
  };
  rel("lambda(1) vs Z_B(1|1/2)", zeros::zero_sum(zeros::SumKind::lambda(1), set, false, ctx),
      zeros::zero_sum(zeros::SumKind::zb(Complex(1L), half()), set, false, ctx));
  rel("lambda0(1) vs Z_B(1|0)", zeros::zero_sum(zeros::SumKind::lambda0(1), set, false, ctx),
      zeros::zero_sum(zeros::SumKind::zb(Complex(1L), Real(0L)), set, false, ctx));
  return it.done();
}

CheckResult planted_growth(const zeros::ZeroSet& set) {
  Item it("|1 - 1/rho| > 1 exactly for the members with Re rho < 1/2");
  long growing = 0;
  for (const auto& r : set.rhos()) {
    bool grows = mp::abs(Complex(1L) - mp::reciprocal(r)) > 1L;
    bool left = r.re() < half();
    if (grows != left) it.fail("rho = " + mp::to_string(r, 10));
    if (grows) ++growing;
  }
  if (growing == 0) it.fail("no growing member in a set with a planted zero");
  it.note(std::to_string(growing) + " growing members");
  return it.done();
}

// ---------------------------------------------------------------------------
// continuation

CheckResult continuation_limits(const PrecisionContext& ctx) {
  Item it("continuation limits at s = 0, -1, -2 equal the rational values");
  PrecisionScope scope(ctx.bits);
  for (long k : {0L, -1L, -2L}) {
    auto l = sz::za_continuation_limit(k, Real(1L), ctx);
    Real e = mp::to_real(sz::za_rational(-k, Rational(1)));
    expect_close(it, "s=" + std::to_string(k), l.value, e, l.error + rel_tol(ctx, e));
  }
  return it.done();
}

CheckResult continuation_residue(const PrecisionContext& ctx) {
  Item it("(s-1) Z_A(s|1) -> -1/2 as s -> 1");
  PrecisionScope scope(ctx.bits);
  Real h = mp::pow2(-30);
  auto z = sz::za_continuation(Complex(1L - h), Real(1L), ctx);
  Real r = -h * z.value.re();
  expect_close(it, "s = 1 - 2^-30", r, -half(), Real::parse("1e-6"));
  it.note("residue " + str(r, 12));
  return it.done();
}

CheckResult continuation_derivative(const PrecisionContext& ctx) {
  Item it("numerical s-derivative of the continuation at 0 matches Z_A'(0|1)");
  PrecisionScope scope(ctx.bits);
  Real t(1L);
  auto diff = [&](const Real& h) {
    auto p = sz::za_continuation(Complex(h), t, ctx), m = sz::za_continuation(Complex(-h), t, ctx);
    return (p.value.re() - m.value.re()) / (2 * h);
  };
  Real h = mp::pow2(-(ctx.bits / 6));
  Real d = (4 * diff(h / 2) - diff(h)) / 3;
  auto ref = sz::za_deriv0(t, ctx);
  double digits = mp::agreeing_digits(d, ref.value, Real(0L));
  if (digits < 10) it.fail("only " + std::to_string(digits) + " digits");
  it.note(std::to_string(static_cast<int>(digits)) + " digits");
  return it.done();
}

// ---------------------------------------------------------------------------
// poles

CheckResult pole_probe(const zeros::ZeroSet& set, const PrecisionContext& ctx) {
  Item it("Z_B(1/2+eps|t) ~ eps^-2/(8 pi) - log(2 pi) eps^-1/(4 pi)");
  PrecisionScope scope(ctx.bits);
  std::vector<Real> eps;
  for (const char* e : {"0.01", "0.015", "0.02", "0.03", "0.04", "0.05"}) eps.push_back(Real::parse(e));
  Real a0 = 1L / (8 * mp::pi()), b0 = -mp::log(2 * mp::pi()) / (4 * mp::pi());
  for (const char* ts : {"0", "0.5"}) {
    auto f = sz::zb_pole_probe(eps, set, Real::parse(ts), ctx);
    Real ra = mp::abs(f.a / a0 - 1L), rb = mp::abs(f.b / b0 - 1L);
    if (!(ra <= Real::parse("0.01"))) it.fail(std::string("t=") + ts + ": a off by " + str(ra, 3));
    if (!(rb <= Real::parse("0.05"))) it.fail(std::string("t=") + ts + ": b off by " + str(rb, 3));
    it.note(std::string("t=") + ts + " a rel " + str(ra, 2) + " b rel " + str(rb, 2));
  }
  return it.done();
}

CheckResult counting(const zeros::ZeroSet& set, const Real& lo, const Real& hi) {
  Item it("|N(T) - counting estimate| <= 2 on [" + str(lo) + ", " + str(hi) + "]");
  if (!(set.complete_below >= hi)) {
    it.fail("zero set is certified only below " + str(set.complete_below));
    return it.done();
  }
  // the gap is monotone between ordinates, so its sup sits at the ends and at each jump
  std::vector<std::pair<Real, long>> probes;
  probes.push_back({lo, zeros::count_below(set, lo)});
  probes.push_back({hi, zeros::count_below(set, hi)});
  long below = 0;
  for (const auto& e : set.entries) {
    long w = e.multiplicity * (e.on_line() ? 1 : 2);
    if (e.gamma >= lo && e.gamma <= hi) {
      probes.push_back({e.gamma, below + w});
      probes.push_back({e.gamma, below});
    }
    below += w;
  }
  Real worst;
  for (const auto& [T, N] : probes) {
    Real gap = mp::abs(Real(N) - zeros::counting_estimate(T, set.model));
    if (gap > worst) worst = gap;
    if (gap > 2L) {
      it.fail("T = " + str(T, 12) + ": N = " + std::to_string(N) + ", gap " + str(gap, 4));
      break;
    }
  }
  it.note("sup gap " + str(worst, 4));
  return it.done();
}

CheckResult direct_sums(const zeros::ZeroSet& set, const PrecisionContext& ctx) {
  Item it("tail-corrected zero sums agree with the Taylor-coefficient routes");
  PrecisionScope scope(ctx.bits);
  auto cmp = [&](const std::string& what, const mp::Estimate<Complex>& direct, const mp::Estimate<Real>& ref) {
    expect_close(it, what, direct.value.re(), ref.value, direct.error + ref.error);
  };
  cmp("Z_B(1|0)", zeros::zero_sum(zeros::SumKind::zb(Complex(1L), Real(0L)), set, true, ctx),
      sz::zb_positive(1, Real(0L), ctx));
  cmp("Z_B(2|1/2)", zeros::zero_sum(zeros::SumKind::zb(Complex(2L), half()), set, true, ctx),
      sz::zb_positive(2, half(), ctx));
  cmp("Z_A(2|1/2)", zeros::zero_sum(zeros::SumKind::za(2, half()), set, true, ctx), sz::za_positive(2, half(), ctx));
  cmp("Z_C(2|0)", sz::zc_values(Complex(2L), Real(0L), set, ctx), sz::zb_positive(1, Real(0L), ctx));
  return it.done();
}

// ---------------------------------------------------------------------------
// lambda

const char* vname(kl::Variant v) { return v == kl::Variant::classic ? "classic" : "central"; }

CheckResult route_agreement(const kl::LambdaSeries& a, const kl::LambdaSeries& b, long n_max) {
  Item it(std::string("binomial and composition routes agree to 12 digits (") + vname(a.variant) + ")");
  double worst = 1e9;
  long at = 0;
  for (long n = 1; n <= n_max; ++n) {
    double d = mp::agreeing_digits(a.at(n), b.at(n), Real(0L));
    if (d < worst) {
      worst = d;
      at = n;
    }
  }
  if (worst < 12) it.fail("n=" + std::to_string(at) + ": " + std::to_string(worst) + " digits");
  it.note("worst " + std::to_string(static_cast<int>(worst)) + " digits at n=" + std::to_string(at));
  return it.done();
}

CheckResult direct_route(kl::Variant v, const kl::LambdaSeries& ref, const zeros::ZeroSet& set,
                         const PrecisionContext& ctx) {
  Item it(std::string("direct zero sums agree within their tail bound for n <= 20 (") + vname(v) + ")");
  PrecisionScope scope(ctx.bits);
  for (long n = 1; n <= 20; ++n) {
    auto d = kl::lambda_direct(v, n, set, ctx, true);
    expect_close(it, "n=" + std::to_string(n), d.value, ref.at(n), d.error + ref.error_at(n));
  }
  return it.done();
}

CheckResult contour_route(kl::Variant v, const kl::LambdaSeries& ref, const zeros::ZeroSet& set,
                          const PrecisionContext& ctx) {
  Item it(std::string("contour integral agrees to 1e-4 relative for n <= 4 (") + vname(v) + ")");
  PrecisionScope scope(ctx.bits);
  for (long n = 1; n <= 4; ++n) {
    auto c = kl::lambda_contour(v, n, set, ctx);
    Real rel = mp::abs(c.value / ref.at(n) - 1L);
    if (!(rel <= Real::parse("1e-4"))) it.fail("n=" + std::to_string(n) + ": relative gap " + str(rel, 3));
  }
  return it.done();
}

CheckResult positivity(const kl::LambdaSeries& s, long n_max) {
  Item it(std::string("lambda_n > 0 for n <= ") + std::to_string(n_max) + " (" + vname(s.variant) + ")");
  for (long n = 1; n <= n_max; ++n)
    if (!(s.at(n) > 0L)) {
      it.fail("lambda_" + std::to_string(n) + " = " + str(s.at(n)));
      break;
    }
  return it.done();
}

CheckResult lambda_one(const kl::LambdaSeries& classic, const kl::LambdaSeries& central, const PrecisionContext& ctx) {
  Item it("lambda_1 = Z_A(1|1/2) = 1 - log(4 pi)/2 + gamma/2 and lambda_1^0 = Z_B(1|0)");
  PrecisionScope scope(ctx.bits);
  Real l1 = 1L - mp::log(4 * mp::pi()) / 2 + mp::euler_gamma() / 2;
  if (mp::agreeing_digits(classic.at(1), l1, Real(0L)) < 25) it.fail("lambda_1 = " + str(classic.at(1), 30));
  auto za = sz::za_positive(1, half(), ctx);
  expect_close(it, "lambda_1 vs Z_A(1|1/2)", classic.at(1), za.value, za.error + rel_tol(ctx, l1));
  auto zb = sz::zb_positive_z1e(1, ctx);
  expect_close(it, "lambda_1^0 vs Z_B(1|0)", central.at(1), zb.value, zb.error + rel_tol(ctx, zb.value));
  // printed: 0.0231050, 0.0923828
  if (str(central.at(1), 6) != "0.023105") it.fail("lambda_1^0 = " + str(central.at(1), 10));
  if (str(central.at(2), 6) != "0.0923828") it.fail("lambda_2^0 = " + str(central.at(2), 10));
  return it.done();
}

CheckResult tempered_law(const kl::LambdaSeries& s) {
  Item it(std::string("|lambda_n - n(log n - 1 + gamma - log 2pi)/2|/n <= 0.05 and shrinking on [100, 256] (") +
          vname(s.variant) + ")");
  auto model = zeros::AsymptoticModel::riemann();
  double m1 = 0, m2 = 0;
  for (long n = 100; n <= 256; ++n) {
    double r = std::abs(mp::to_double((s.at(n) - kl::predict_tempered(n, model)) / n));
    double& m = n < 200 ? m1 : m2;
    m = std::max(m, r);
  }
  if (std::max(m1, m2) > 0.05) it.fail("max " + std::to_string(std::max(m1, m2)));
  if (!(m2 < m1)) it.fail("octave maxima " + std::to_string(m1) + ", " + std::to_string(m2) + " do not decrease");
  it.note("octave maxima " + std::to_string(m1) + ", " + std::to_string(m2));
  return it.done();
}

CheckResult planted_exactness(kl::Variant v, const PrecisionContext& ctx) {
  Item it(std::string("planted quadruple contributes exactly the predicted oscillation (") + vname(v) + ")");
  PrecisionScope scope(ctx.bits);
  zeros::ZeroSet set = toy_set();
  long k = 0;
  for (size_t i = 0; i < set.entries.size(); ++i)
    if (!set.entries[i].on_line()) k = static_cast<long>(i) + 1;
  zeros::ZeroSet rest = zeros::remove_entry(set, k);
  zeros::ZeroSet lone;
  lone.entries.push_back(set.entries[k - 1]);
  auto rhos = lone.rhos();
  for (long n : {1L, 7L, 40L, 120L}) {
    Real diff = kl::lambda_direct(v, n, set, ctx, false).value - kl::lambda_direct(v, n, rest, ctx, false).value;
    auto osc = kl::predict_oscillation(set, v, n);
    Complex grow(0L), full(0L);
    if (v == kl::Variant::classic) {
      // 1 - 1/rho = (tau + i/2)/(tau - i/2)
      for (const auto& r : rhos) {
        Complex z = mp::pow(Complex(1L) - mp::reciprocal(r), n);
        full += Complex(1L) - z;
        if (r.re() < half()) grow -= z;
      }
    } else {
      for (const auto& [tau, m] : lone.taus()) {
        Complex th = zeros::theta(tau);
        Complex e = mp::exp(mp::mul_i(th * n)), einv = mp::reciprocal(e);
        full += Complex(2L) - e - einv;
        grow -= (mp::abs(e) > 1L ? e : einv);
      }
    }
    Real scale = mp::max(mp::abs(full), Real(1L)) * mp::pow2(-(ctx.bits - 32));
    expect_close(it, "quadruple n=" + std::to_string(n), diff, full.re(), scale);
    expect_close(it, "oscillation n=" + std::to_string(n), osc.total.re(), grow.re(), scale);
  }
  return it.done();
}

CheckResult cancellation(const kl::LambdaSeries& s, const PrecisionContext& ctx) {
  Item it(std::string("cancellation grows at most linearly and escalation keeps 12 digits to n = 256 (") +
          vname(s.variant) + ")");
  // the precision budget assumes 3.5 bits of loss per step
  const double slope = 3.5 * std::log10(2.0);
  for (long n = 1; n <= s.n_last(); ++n) {
    double c = s.cancellation_digits[static_cast<size_t>(n - 1)];
    if (!std::isfinite(c) || c > slope * static_cast<double>(n) + 10) {
      it.fail("n=" + std::to_string(n) + ": " + std::to_string(c) + " digits cancelled");
      break;
    }
  }
  PrecisionContext e = ctx;
  e.escalation = mp::Escalation::double_and_compare;
  e.target_digits = 20;
  auto esc = kl::lambda_composition(s.variant, std::min<long>(256, s.n_last()), e);
  PrecisionScope scope(esc.precision_used.back());
  for (long n = 1; n <= esc.n_last(); ++n) {
    Real rel = esc.error_at(n) / mp::abs(esc.at(n));
    if (!(rel <= tenth_pow(12))) {
      it.fail("n=" + std::to_string(n) + ": relative error " + str(rel, 3));
      break;
    }
    if (mp::agreeing_digits(esc.at(n), s.at(n), Real(0L)) < 12) {
      it.fail("n=" + std::to_string(n) + ": escalated value disagrees");
      break;
    }
  }
  return it.done();
}

CheckResult counterfactual(kl::Variant v, const PrecisionContext& ctx) {
  Item it(std::string("planted zero is flagged with the predicted growth rate (") + vname(v) + ")");
  PrecisionContext c = ctx.with_bits(128);
  PrecisionScope scope(c.bits);
  zeros::ZeroSet set = toy_set();
  auto s = kl::lambda_direct_series(v, 600, set, c, false);
  auto rep = kl::criterion_report(s, 1, 600, zeros::AsymptoticModel::riemann(), &set);
  if (rep.classification != kl::Classification::violation_signature)
    it.fail("classified " + kl::to_string(rep.classification) + " (" + rep.note + ")");
  if (!rep.fitted_growth_rate || !rep.predicted_growth_rate) {
    it.fail("no growth rate fitted");
    return it.done();
  }
  double rel = std::abs(*rep.fitted_growth_rate / *rep.predicted_growth_rate - 1);
  if (rel > 0.01) it.fail("fitted " + std::to_string(*rep.fitted_growth_rate) + " vs " +
                          std::to_string(*rep.predicted_growth_rate));
  it.note("fitted " + std::to_string(*rep.fitted_growth_rate) + " predicted " +
          std::to_string(*rep.predicted_growth_rate));
  return it.done();
}

// runs `f`, turning an escaped exception into a failed item
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::tables: return "tables";
    case Suite::identities: return "identities";
    case Suite::continuation: return "continuation";
    case Suite::poles: return "poles";
    case Suite::lambda: return "lambda";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (auto s : {Suite::tables, Suite::identities, Suite::continuation, Suite::poles, Suite::lambda})
    if (to_string(s) == name) return s;
  throw DomainError("unknown suite '" + name + "'");
}

bool needs_zeros(Suite s) { return s == Suite::poles || s == Suite::lambda; }

zeros::ZeroSet toy_set() {
  std::vector<Real> g;
  for (long k = 5; k <= 54; ++k) g.push_back(Real(k));
  auto set = zeros::from_ordinates(g, Real(0L));
  zeros::ZeroEntry planted{Real::parse("0.9"), Real(5L), 1, zeros::Provenance::synthetic};
  set.entries.insert(set.entries.begin(), planted);
  set.synthetic = true;
  return set;
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  ctx.validate();
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { out.push_back(guarded(name, f)); };
  if (needs_zeros(suite) && opt.zeros == nullptr) throw DomainError("suite " + to_string(suite) + " needs a zero set");
  switch (suite) {
    case Suite::tables:
      add("exact numbers", exact_numbers);
      add("Hurwitz rows", [&] { return hurwitz_rows(ctx); });
      add("rational cross-consistency", rational_cross_consistency);
      add("reflection imprint", reflection_imprint);
      add("printed rational values", headline_values);
      add("trivial partner", [&] { return trivial_partner(ctx); });
      add("exact cells", [&] { return exact_cells(ctx); });
      break;
    case Suite::identities: {
      add("determinant", [&] { return determinant(ctx); });
      add("Lerch form", [&] { return jonquiere(ctx); });
      add("precision monotonicity", [&] { return precision_monotonicity(ctx); });
      add("xi symmetry", [&] { return xi_symmetry(ctx); });
      add("decomposition", [&] { return decomposition(ctx); });
      add("Taylor round trip", [&] { return taylor_round_trip(ctx); });
      add("radius robustness", [&] { return radius_robustness(ctx); });
      add("parity imprint", [&] { return parity_imprint(ctx); });
      add("odd-n sum identity", [&] { return odd_sum_identity(ctx); });
      add("generating function", [&] { return generating_function(ctx); });
      add("second-kind conversion", [&] { return zba_identity(ctx); });
      add("confluent routes", [&] { return confluent_routes(ctx); });
      add("transcendental routes", [&] { return transcendental_routes(ctx); });
      zeros::ZeroSet toy = toy_set();
      add("quadruple closure", [&] { return quadruple_closure(toy, "planted set"); });
      add("lambda_1 sums", [&] { return lambda_one_sums(toy, ctx); });
      add("planted growth", [&] { return planted_growth(toy); });
      break;
    }
    case Suite::continuation:
      add("continuation limits", [&] { return continuation_limits(ctx); });
      add("continuation residue", [&] { return continuation_residue(ctx); });
      add("continuation derivative", [&] { return continuation_derivative(ctx); });
      break;
    case Suite::poles: {
      const zeros::ZeroSet& set = *opt.zeros;
      add("quadruple closure", [&] { return quadruple_closure(set, "input set"); });
      add("counting", [&] { return counting(set, Real(50L), Real(500L)); });
      add("pole probe", [&] { return pole_probe(set, ctx); });
      add("direct sums", [&] { return direct_sums(set, ctx); });
      add("lambda_1 sums", [&] { return lambda_one_sums(set, ctx); });
      break;
    }
    case Suite::lambda: {
      const zeros::ZeroSet& set = *opt.zeros;
      long n_max = std::max<long>(opt.n_max, 256);
      PrecisionContext fixed = ctx;
      fixed.escalation = mp::Escalation::fixed;
      std::vector<kl::LambdaSeries> bin;
      for (auto v : {kl::Variant::classic, kl::Variant::central}) {
        try {
          bin.push_back(kl::lambda_binomial(v, n_max, fixed));
        } catch (const std::exception& e) {
          out.push_back({std::string("binomial series (") + vname(v) + ")", false, e.what()});
          return out;
        }
      }
      for (const auto& b : bin) {
        add("route agreement", [&] { return route_agreement(b, kl::lambda_composition(b.variant, n_max, fixed), n_max); });
        add("direct route", [&] { return direct_route(b.variant, b, set, ctx); });
        add("contour route", [&] { return contour_route(b.variant, b, set, ctx); });
        add("positivity", [&] { return positivity(b, n_max); });
        add("tempered law", [&] { return tempered_law(b); });
        add("cancellation", [&] { return cancellation(b, ctx); });
        add("planted exactness", [&] { return planted_exactness(b.variant, ctx); });
        add("counterfactual", [&] { return counterfactual(b.variant, ctx); });
      }
      add("lambda_1", [&] { return lambda_one(bin[0], bin[1], ctx); });
      break;
    }
  }
  return out;
}

}  // namespace szeta::verify
