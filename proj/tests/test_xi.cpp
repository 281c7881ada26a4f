#include "doctest.h"

#include "szeta/errors.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/xi/xi.hpp"

using namespace szeta;
using namespace szeta::mp;
using namespace szeta::xi;

namespace {

PrecisionContext ctx30() {
  PrecisionContext c;
  c.bits = 192;
  c.target_digits = 30;
  return c;
}

double digits(const Real& a, const Real& b) { return agreeing_digits(a, b, Real(1L)); }

// x(x-1) pi^{-x/2} Gamma(x/2) zeta(x) from its pieces, real x > 1
Real xi_oracle(const Real& x) {
  return x * (x - 1L) * exp(-x / 2 * log(pi())) * gamma(x / 2) * zeta(x);
}

}  // namespace

TEST_CASE("Xi values") {
  PrecisionScope scope(192);
  // Xi(2) = 2 pi^{-1} Gamma(1) pi^2/6 = pi/3
  CHECK(digits(xi::xi(Complex(2L)).re(), pi() / 3) >= 50);
  CHECK(digits(xi::xi(Complex(0L)).re(), Real(1L)) >= 50);
  CHECK(digits(xi::xi(Complex(1L)).re(), Real(1L)) >= 50);
  for (const char* x : {"1.7", "3.25", "6"}) CHECK(digits(xi::xi(Complex(Real::parse(x))).re(), xi_oracle(Real::parse(x))) >= 45);
}

TEST_CASE("Xi is symmetric under x -> 1 - x") {
  PrecisionScope scope(192);
  for (const char* re : {"0.2", "-1.5", "2.75"}) {
    Complex x(Real::parse(re), Real::parse("3.5"));
    Complex y(1L - x.re(), -x.im());
    Complex a = xi::xi(x), b = xi::xi(y);
    CHECK(to_double(abs(a - b) / abs(a)) < 1e-45);
  }
}

TEST_CASE("logarithmic derivative") {
  PrecisionScope scope(192);
  Real x = Real::parse("2.5"), h = pow2(-40);
  // central difference of log Xi, error O(h^2)
  Real fd = (log(xi::xi(Complex(x + h)).re()) - log(xi::xi(Complex(x - h)).re())) / (2 * h);
  CHECK(digits(xi_log_deriv(Complex(x)).re(), fd) >= 20);
  // Xi'/Xi is odd about 1/2
  Complex p = xi_log_deriv(Complex(Real::parse("0.8")));
  Complex m = xi_log_deriv(Complex(Real::parse("0.2")));
  CHECK(digits(p.re(), -m.re()) >= 45);
  CHECK_THROWS_AS((void)zeta_log_deriv(Complex(1L)), PoleError);
}

TEST_CASE("Hardy Z at the first zero") {
  PrecisionScope scope(128);
  Real g = Real::parse(kFirstOrdinate);
  CHECK(to_double(abs(hardy_z(g))) < 1e-25);
  CHECK(hardy_z(g - Real::parse("0.01")) * hardy_z(g + Real::parse("0.01")) < 0L);
  // Z(t) = +-|zeta(1/2 + it)|
  Real t(20L);
  CHECK(digits(abs(hardy_z(t)), abs(zeta(Complex(Real(1L) / 2, t)))) >= 30);
}

TEST_CASE("Taylor data of log Xi about 1/2") {
  PrecisionScope scope(192);
  auto s = log_deriv_series(Tag::log_xi, Real(1L) / 2, 16, ctx30());
  REQUIRE(s.order() == 16);
  // log Xi is even about 1/2: odd derivatives vanish
  for (long n = 1; n <= 15; n += 2) CHECK(to_double(abs(s.derivative(n))) < 1e-30);
  // second derivative against a difference quotient of log Xi
  Real h = pow2(-30), b = Real(1L) / 2;
  Real fd = (log(xi::xi(Complex(b + h)).re()) - 2 * log(xi::xi(Complex(b)).re()) + log(xi::xi(Complex(b - h)).re())) / sqr(h);
  CHECK(digits(s.derivative(2), fd) >= 15);
}

TEST_CASE("Taylor data does not depend on the radius") {
  PrecisionScope scope(192);
  Real b(3L);
  auto a = log_deriv_series(Tag::log_xi, b, 12, ctx30(), Real(3L));
  auto c = log_deriv_series(Tag::log_xi, b, 12, ctx30(), Real(5L));
  for (long n = 1; n <= 12; ++n) CHECK(agreeing_digits(a.derivative(n), c.derivative(n), Real(0L)) >= 25);
  CHECK_THROWS_AS((void)log_deriv_series(Tag::log_xi, b, 12, ctx30(), max_radius(Tag::log_xi, b) + 1L), RadiusError);
  // log zeta has the pole at 1 inside any circle around 3 of radius >= 2
  CHECK(to_double(max_radius(Tag::log_zeta, b)) <= 2.0);
}

TEST_CASE("decomposition log Xi = log zeta + elementary parts") {
  PrecisionScope scope(192);
  Real b = Real(3L) / 2;
  auto x = log_deriv_series(Tag::log_xi, b, 6, ctx30());
  auto z = log_deriv_series(Tag::log_zeta, b, 6, ctx30());
  // log Xi = log x + log(x-1) - (x/2) log pi + log Gamma(x/2) + log zeta
  for (long n = 1; n <= 6; ++n) {
    Real sign = n % 2 ? Real(1L) : Real(-1L);
    Real fact = to_real(factorial(n - 1));
    Real elem = sign * fact * (1L / pow(b, n) + 1L / pow(b - 1L, n));
    if (n == 1) elem -= log(pi()) / 2;
    elem += polygamma(static_cast<int>(n - 1), b / 2) / pow2(n);
    CHECK(agreeing_digits(x.derivative(n), z.derivative(n) + elem, Real(1L)) >= 28);
  }
}
