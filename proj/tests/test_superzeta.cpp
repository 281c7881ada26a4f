#include "doctest.h"

#include "szeta/errors.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/superzeta/superzeta.hpp"
#include "szeta/zeros/zeros.hpp"

using namespace szeta;
using namespace szeta::mp;
using namespace szeta::superzeta;

namespace {

PrecisionContext ctx30() {
  PrecisionContext c;
  c.bits = 192;
  c.target_digits = 30;
  return c;
}

double digits(const Real& a, const Real& b) { return agreeing_digits(a, b, Real(1L)); }

const char* kGammaQuarter = "3.6256099082219083119306851558676720029951676828800654674333799956991924353872912";
const char* kZetaHalf = "-1.4603545088095868128894991525152980125083779038017117526942181660543066987156529";

// Z_A(-n|t) from the trivial-zero partner 2^{-s} zeta(s, 5/4 + t/2) and the pole at x = 1
Rational za_oracle(long n, const Rational& t) {
  Rational w = Rational(5, 4) + t / 2;
  Rational r = rpow(Rational(2), n) * bernoulli_poly(n + 1, w) / Rational(n + 1) + rpow(t - Rational(1, 2), n);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("first-kind values at non-positive integers") {
  for (const char* ts : {"0", "1/2", "1", "3/2", "-1/3"})
    for (long n = 0; n <= 8; ++n) CHECK(za_rational(n, parse_rational(ts)) == za_oracle(n, parse_rational(ts)));
  CHECK(za_rational(0, Rational(0)) == Rational(7, 4));
  CHECK(za_rational(0, Rational(1, 2)) == 2);
  CHECK(zs_trivial_rational(1, Rational(1, 2)) == -Rational(11, 12));
}

TEST_CASE("reflection imprint") {
  for (const char* ts : {"0", "1/2", "2/7"}) {
    Rational t = parse_rational(ts);
    for (long n = 0; n <= 6; ++n) {
      Rational rhs = za_rational(n, t);
      if (n % 2) rhs = -rhs;
      rhs += bernoulli_poly(n + 1, Rational(1, 2) - t) / Rational(n + 1);
      CHECK(za_rational(n, -t) == rhs);
    }
  }
}

TEST_CASE("second-kind values at non-positive integers") {
  // Z_B(0|t) = 7/8 for every t, and the values are even in t
  for (const char* ts : {"0", "1/2", "3/7", "5"}) {
    Rational t = parse_rational(ts);
    CHECK(zb_rational(0, t) == Rational(7, 8));
    for (long m = 1; m <= 6; ++m) CHECK(zb_rational(m, t) == zb_rational(m, -t));
  }
  // confluent rule at t = 0
  for (long m = 0; m <= 6; ++m) {
    Rational want = za_rational(2 * m, Rational(0)) / 2;
    if (m % 2) want = -want;
    CHECK(zb_rational(m, Rational(0)) == want);
  }
  CHECK_THROWS_AS((void)zb_rational(-1, Rational(0)), DomainError);
}

TEST_CASE("derivatives at 0") {
  PrecisionScope scope(192);
  auto c = ctx30();
  Real closed = log(pow(Real(2L), Real(11L) / 4) * sqrt(pi()) /
                    (Real::parse(kGammaQuarter) * abs(Real::parse(kZetaHalf))));
  CHECK(digits(za_deriv0(Real(0L), c).value, closed) >= 30);
  CHECK(digits(za_deriv0(Real(1L) / 2, c).value, log(Real(2L)) / 2) >= 30);
  CHECK(digits(zb_deriv0(Real(1L) / 2, c).value, log(8 * pi()) / 4) >= 30);
}

TEST_CASE("parity in t of the first kind at positive n") {
  PrecisionScope scope(192);
  auto c = ctx30();
  Real t = Real::parse("0.3");
  auto p = za_positive_range(5, t, c);
  auto m = za_positive_range(5, -t, c);
  for (long n = 1; n <= 5; ++n) {
    Real b = n % 2 ? Real(-m[n - 1].value) : m[n - 1].value;
    CHECK(digits(p[n - 1].value, b) >= 28);
  }
}

TEST_CASE("second kind: conversion, derivative and confluent routes agree") {
  PrecisionScope scope(192);
  auto c = ctx30();
  for (long m = 1; m <= 4; ++m) {
    CHECK(agreeing_digits(zb_positive_zba(m, Real(1L), c).value, zb_positive_t2(m, Real(1L), c).value, Real(0L)) >= 25);
    CHECK(agreeing_digits(zb_positive_z1e(m, c).value, zb_positive_t2(m, Real(0L), c).value, Real(0L)) >= 25);
  }
  CHECK(zb_positive_method(Real(0L)) == Method::z1e_confluence);
  CHECK(zb_positive_method(pow2(-10)) == Method::xi_derivative);
  CHECK(zb_positive_method(Real(1L)) == Method::zba_conversion);
  CHECK_THROWS_AS((void)zb_positive_zba(2, Real(0L), c), DomainError);
}

TEST_CASE("positive-integer values against sums over the zeros") {
  PrecisionScope scope(128);
  PrecisionContext c;
  c.bits = 128;
  c.target_digits = 25;
  auto z = zeros::find_zeros(100, c);
  // Z_B(2|1/2), Z_B(1|0) and Z_A(2|1/2) over 100 zeros plus the density tail
  struct Case {
    zeros::SumKind kind;
    Estimate<Real> route;
  };
  Case cases[] = {
      {zeros::SumKind::zb(Complex(2L), Real(1L) / 2), zb_positive(2, Real(1L) / 2, c)},
      {zeros::SumKind::zb(Complex(1L), Real(0L)), zb_positive(1, Real(0L), c)},
      {zeros::SumKind::za(2, Real(1L) / 2), za_positive(2, Real(1L) / 2, c)},
  };
  for (const auto& k : cases) {
    auto s = zero_sum(k.kind, z, true, c);
    Real gap = abs(s.value.re() - k.route.value);
    CHECK(gap <= s.error + k.route.error);
    CHECK(to_double(gap / abs(k.route.value)) < 1e-3);
  }
}

TEST_CASE("trivial partner") {
  PrecisionScope scope(192);
  auto c = ctx30();
  Real t = Real::parse("0.25");
  // Z_S(2|t) = zeta(2, 5/4 + t/2) / 4
  Real want = hurwitz_zeta(Complex(2L), Real(5L) / 4 + t / 2, 0, c).value.re() / 4;
  CHECK(digits(zs_trivial(Complex(2L), t, c).value.re(), want) >= 30);
  for (long n = 0; n <= 5; ++n) {
    Rational tr = Rational(1, 4);
    Real z = zs_trivial(Complex(Real(-n)), to_real(tr), c).value.re();
    CHECK(digits(z, to_real(zs_trivial_rational(n, tr))) >= 30);
  }
}

TEST_CASE("analytic continuation") {
  PrecisionScope scope(192);
  auto c = ctx30();
  Real t(1L);
  // continuous through s = 0, where the value is rational; the slope there is Z_A'(0|1)
  Real h = pow2(-20);
  Real v = za_continuation(Complex(h), t, c).value.re();
  Real slope = (v - to_real(za_rational(0, Rational(1)))) / h;
  CHECK(digits(slope, za_deriv0(t, c).value) >= 5);
  CHECK_THROWS_AS((void)za_continuation(Complex(2L), t, c), DomainError);
  CHECK_THROWS_AS((void)j_mellin(Complex(2L), Real(1L) / 4, c), DomainError);
  CHECK_THROWS_AS((void)za_continuation_limit(1, t, c), DomainError);
}

TEST_CASE("third kind finite part") {
  PrecisionScope scope(128);
  Real tau(3L);
  CHECK(digits(zc_fp0(tau), Real(7L) / 8 + log(2 * pi()) / (2 * pi()) * tau) >= 35);
}

TEST_CASE("table columns: exact rows are exactly the closed-form rows") {
  PrecisionScope scope(192);
  auto c = ctx30();
  for (Family f : {Family::ZA, Family::ZB, Family::ZS, Family::ZC})
    for (const char* ts : {"0", "1/2"}) {
      auto rows = table_column(f, parse_rational(ts), -4, 3, c);
      CHECK_FALSE(rows.empty());
      for (const auto& r : rows) CHECK(r.exact() == (r.method == Method::table_closed_form));
    }
  auto a = table_column(Family::ZA, Rational(1, 2), 0, 0, c);
  REQUIRE(a.size() >= 1);
  CHECK(a[0].payload_string(30) == "2");
  CHECK(to_string(Method::numeric_closed_form) == "numeric_closed_form");
}
