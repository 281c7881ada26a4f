#include "doctest.h"

#include <complex>
#include <vector>

#include "szeta/errors.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/cauchy.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/precision.hpp"
#include "szeta/mp/quadrature.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/mp/series.hpp"
#include "szeta/mp/stieltjes.hpp"

using namespace szeta;
using namespace szeta::mp;

namespace {

PrecisionContext ctx30() {
  PrecisionContext c;
  c.bits = 192;
  c.target_digits = 30;
  return c;
}

// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2 there)
std::vector<Rational> akiyama_tanigawa(long n) {
  std::vector<Rational> out, a(n + 1);
  for (long m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  out[1] = -out[1];
  return out;
}

// digits below which a and b agree, relative to max(|b|, 1)
double digits(const Real& a, const Real& b) { return agreeing_digits(a, b, Real(1L)); }

const char* kApery = "1.2020569031595942853997381615114499907649862923404988817922715553";
const char* kCatalan = "0.91596559417721901505460351493238411077414937428167213426649811962";
const char* kGammaQuarter = "3.6256099082219083119306851558676720029951676828800654674333799956991924353872912";

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/8")) == "-3/4");
  CHECK(to_string(parse_rational("-0.25")) == "-1/4");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0.0625")) == "1/16");
  CHECK(to_string(parse_rational("007/014")) == "1/2");
  CHECK_THROWS_AS((void)parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS((void)parse_rational("abc"), Error);
}

TEST_CASE("Bernoulli and Euler numbers") {
  auto b = akiyama_tanigawa(30);
  for (long n = 0; n <= 30; ++n) CHECK(bernoulli_number(n) == b[n]);
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  // secant numbers 1, -1, 5, -61, 1385, -50521, 2702765
  long e[] = {1, -1, 5, -61, 1385, -50521, 2702765};
  for (long k = 0; k < 7; ++k) CHECK(euler_number(2 * k) == BigInt(e[k]));
  CHECK_THROWS_AS((void)euler_number(3), DomainError);
}

TEST_CASE("Bernoulli polynomials") {
  // B_2(x) = x^2 - x + 1/6, B_3(x) = x^3 - 3x^2/2 + x/2
  for (const char* s : {"0", "1/4", "1/2", "5/4", "-2/3"}) {
    Rational x = parse_rational(s);
    Rational b2 = x * x - x + Rational(1, 6);
    Rational b3 = x * x * x - Rational(3, 2) * x * x + x / 2;
    CHECK(bernoulli_poly(2, x) == b2);
    CHECK(bernoulli_poly(3, x) == b3);
  }
}

TEST_CASE("Hurwitz zeta at non-positive integers is rational") {
  PrecisionScope scope(192);
  for (const char* ws : {"1/4", "1/2", "1", "5/4"})
    for (long n = 0; n <= 8; ++n) {
      Rational w = parse_rational(ws);
      Rational want = -bernoulli_poly(n + 1, w) / Rational(n + 1);
      auto v = hurwitz_zeta(Complex(Real(-n)), to_real(w), 0, ctx30());
      CHECK(digits(v.value.re(), to_real(want)) >= 40);
    }
}

TEST_CASE("Hurwitz zeta at positive integers") {
  PrecisionScope scope(192);
  auto c = ctx30();
  Real pi2 = sqr(pi());
  CHECK(digits(hurwitz_zeta(Complex(2L), Real(1L), 0, c).value.re(), pi2 / 6) >= 30);
  // zeta(2, 1/2) = 3 zeta(2)
  CHECK(digits(hurwitz_zeta(Complex(2L), Real(1L) / 2, 0, c).value.re(), pi2 / 2) >= 30);
  CHECK(digits(hurwitz_zeta(Complex(3L), Real(1L), 0, c).value.re(), Real::parse(kApery)) >= 30);
  // beta(2) = (zeta(2,1/4) - zeta(2,3/4)) / 16
  Real cat = (hurwitz_zeta(Complex(2L), Real(1L) / 4, 0, c).value.re() -
              hurwitz_zeta(Complex(2L), Real(3L) / 4, 0, c).value.re()) /
             16;
  CHECK(digits(cat, Real::parse(kCatalan)) >= 30);
  CHECK(digits(dirichlet_beta(Complex(2L), c).value.re(), Real::parse(kCatalan)) >= 30);
  // zeta(3, 5/2) = zeta(3, 1/2) - 8 - 8/27 with zeta(3, 1/2) = 7 zeta(3)
  Real want = 7 * Real::parse(kApery) - 8L - Real(8L) / 27;
  CHECK(digits(hurwitz_zeta(Complex(3L), Real(5L) / 2, 0, c).value.re(), want) >= 30);
}

TEST_CASE("derivative of Hurwitz zeta at 0") {
  PrecisionScope scope(192);
  Real s2p = sqrt(2 * pi());
  Real gammas[] = {Real::parse(kGammaQuarter), Real(1L), sqrt(pi()) / 2};
  const char* ws[] = {"0.25", "1", "1.5"};
  for (int i = 0; i < 3; ++i) {
    auto d = hurwitz_zeta(Complex(0L), Real::parse(ws[i]), 1, ctx30());
    CHECK(digits(d.value.re(), log(gammas[i] / s2p)) >= 30);
  }
}

TEST_CASE("Hurwitz zeta at complex s against the Dirichlet series") {
  PrecisionScope scope(128);
  // s = 3 + 2i, w = 0.7: direct sum to N plus the Euler-Maclaurin tail
  Complex s(Real(3L), Real(2L));
  Real w = Real::parse("0.7");
  long N = 2000;
  Complex sum(0L);
  for (long k = 0; k < N; ++k) sum += pow(Complex(Real(k) + w), Complex(-s.re(), -s.im()));
  Complex a(Real(N) + w);
  Complex one_minus_s(1L - s.re(), -s.im());
  Complex tail = pow(a, one_minus_s) / Complex(s.re() - 1L, s.im()) + pow(a, Complex(-s.re(), -s.im())) / Complex(2L);
  tail += s * pow(a, Complex(-s.re() - 1L, -s.im())) / Complex(12L);
  Complex want = sum + tail;
  Complex got = hurwitz(s, w);
  CHECK(to_double(abs(got - want)) < 1e-14);
}

TEST_CASE("gamma family") {
  PrecisionScope scope(192);
  CHECK(digits(gamma(Real(6L)), Real(120L)) >= 50);
  CHECK(digits(gamma(Real(1L) / 2), sqrt(pi())) >= 50);
  CHECK(digits(digamma(Real(1L)), -euler_gamma()) >= 50);
  // psi(1/2) = -gamma - 2 log 2
  CHECK(digits(digamma(Real(1L) / 2), -euler_gamma() - 2 * log(Real(2L))) >= 50);
  CHECK(digits(polygamma(1, Real(1L)), sqr(pi()) / 6) >= 50);
  // psi''(1) = -2 zeta(3)
  CHECK(digits(polygamma(2, Real(1L)), -2 * Real::parse(kApery)) >= 50);
  auto e = polygamma(1, Real(1L) / 2, ctx30());
  CHECK(digits(e.value, sqr(pi()) / 2) >= 30);
  // log Gamma at a complex point against the real routine on the axis
  Complex lg = log_gamma(Complex(Real(7L) / 3));
  CHECK(digits(lg.re(), log_gamma(Real(7L) / 3)) >= 50);
}

TEST_CASE("Stieltjes cumulants") {
  PrecisionScope scope(192);
  auto g = stieltjes_cumulants(4);
  REQUIRE(g.size() == 4);
  // first cumulant is Euler's constant
  CHECK(digits(g[0], euler_gamma()) >= 50);
  // Taylor coefficients of (s-1) zeta(s) at 1: 1, gamma, -gamma_1, ...
  auto t = zeta_g_taylor_at_one(3);
  CHECK(digits(t[0], Real(1L)) >= 50);
  CHECK(digits(t[1], euler_gamma()) >= 50);
  // log[y zeta(1+y)] = gamma y + (gamma_1 ... ): second cumulant from the series
  Real l2 = t[2] - sqr(t[1]) / 2;  // y^2 coefficient of log(1 + t1 y + t2 y^2)
  CHECK(digits(-g[1] / 2, l2) >= 40);
}

TEST_CASE("power series") {
  PrecisionScope scope(128);
  namespace ps = series;
  ps::Series<Real> x(8), one(8);
  x[1] = Real(1L);
  one[0] = Real(1L);
  // exp(log(1 + x)) = 1 + x
  auto l = ps::log1(ps::add(one, x));
  auto e = ps::exp0(l);
  CHECK(digits(e[0], Real(1L)) >= 35);
  CHECK(digits(e[1], Real(1L)) >= 35);
  for (int k = 2; k < 8; ++k) CHECK(to_double(abs(e[k])) < 1e-35);
  // log(1+x) coefficients (-1)^{k+1}/k
  for (int k = 1; k < 8; ++k) CHECK(digits(l[k], Real(k % 2 ? 1L : -1L) / k) >= 35);
  // 1/(1-x) = sum x^k
  auto inv = ps::inverse(ps::add(one, ps::scale(x, Real(-1L))));
  for (int k = 0; k < 8; ++k) CHECK(digits(inv[k], Real(1L)) >= 35);
  // (x/(1-x)) composed into 1/(1-u) gives (1-x)/(1-2x)
  auto g = ps::mul(x, inv);
  auto c = ps::compose(inv, g);
  CHECK(digits(c[0], Real(1L)) >= 35);
  for (int k = 1; k < 8; ++k) CHECK(digits(c[k], pow2(k - 1)) >= 35);
  CHECK_THROWS_AS((void)ps::compose(inv, one), DomainError);
}

TEST_CASE("Cauchy Taylor coefficients") {
  PrecisionScope scope(192);
  CauchyOptions opt;
  opt.radius = Real(1L);
  auto r = cauchy_taylor([](const Complex& z) { return exp(z); }, Real(0L), 20, opt);
  Real fact(1L);
  for (long k = 0; k < 20; ++k) {
    if (k > 0) fact *= k;
    CHECK(digits(r.coeffs[k], 1L / fact) >= 40);
  }
}

TEST_CASE("quadrature") {
  PrecisionScope scope(192);
  Real tol = pow2(-150);
  auto e = exp_sinh([](const Real& x) { return Complex(exp(-x)); }, Real(0L), tol);
  CHECK(digits(e.value.re(), Real(1L)) >= 40);
  auto t = tanh_sinh([](const Real& x) { return Complex(sqrt(x)); }, Real(0L), Real(1L), tol);
  CHECK(digits(t.value.re(), Real(2L) / 3) >= 40);
  // mean of 1/(2 - cos phi) over a period is 1/sqrt(3)
  auto m = periodic_mean([](const Real& p) { return Complex(1L / (2L - cos(p))); }, tol);
  CHECK(digits(m.value.re(), 1L / sqrt(Real(3L))) >= 40);
}

TEST_CASE("precision escalation") {
  PrecisionContext c;
  c.bits = 128;
  c.escalation = Escalation::double_and_compare;
  c.target_digits = 30;
  auto e = escalate(c, [](const PrecisionContext&) { return pi(); });
  CHECK(e.bits == 192);
  // a value that moves with the precision never settles
  c.max_bits = 512;
  CHECK_THROWS_AS((void)escalate(c, [](const PrecisionContext&) { return pow2(-working_bits() / 2); }),
                  ConvergenceError);
  PrecisionContext bad;
  bad.bits = 8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
