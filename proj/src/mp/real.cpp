#include "szeta/mp/real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "szeta/errors.hpp"

namespace szeta::mp {

namespace {
thread_local Bits g_bits = 192;
}

Bits working_bits() noexcept { return g_bits; }

PrecisionScope::PrecisionScope(Bits bits) noexcept : saved_(g_bits) {
  g_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}
PrecisionScope::~PrecisionScope() { g_bits = saved_; }

namespace {

Real parse_decimal(std::string_view text) {
  std::string s(text);
  Real r = fresh();
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.raw(), s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') throw ParseError("not a number: '" + s + "'");
  return r;
}

std::string trim(std::string_view t) {
  size_t a = 0, b = t.size();
  while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
  return std::string(t.substr(a, b - a));
}

}  // namespace

Real Real::parse(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Real q = parse_decimal(trim(std::string_view(s).substr(slash + 1)));
  if (is_zero(q)) throw ParseError("zero denominator in '" + s + "'");
  return parse_decimal(trim(std::string_view(s).substr(0, slash))) / q;
}

Real Real::nan() {
  Real r = fresh();
  mpfr_set_nan(r.raw());
  return r;
}

Real pi() { Real r = fresh(); mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real euler_gamma() { Real r = fresh(); mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }
Real ln2() { Real r = fresh(); mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }
Real pow2(long k) { Real r = fresh(); mpfr_set_ui_2exp(r.raw(), 1, k, MPFR_RNDN); return r; }

double agreeing_digits(const Real& a, const Real& b, const Real& floor_scale) {
  Real scale = max(max(abs(a), abs(b)), abs(floor_scale));
  Real d = abs(a - b);
  if (is_zero(d)) return static_cast<double>(std::min(a.precision(), b.precision())) * 0.30103;
  if (is_zero(scale)) return 0.0;
  return -to_double(log10(d / scale));
}

std::string to_string(const Real& x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x.raw());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Complex reciprocal(const Complex& z) {
  if (is_zero(z.im())) return Complex(1L / z.re());
  Real d = norm(z);
  return {z.re() / d, -z.im() / d};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (is_zero(b.im())) return {a.re() / b.re(), a.im() / b.re()};
  Real d = norm(b);
  return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (is_zero(z.im())) return Complex(m);
  Real s = fresh(), c = fresh();
  sin_cos(z.im(), s, c);
  return {m * c, m * s};
}

Complex expi(const Real& x) {
  Real s = fresh(), c = fresh();
  sin_cos(x, s, c);
  return {c, s};
}

Complex log(const Complex& z) {
  if (is_zero(z.im()) && z.re() > 0) return Complex(log(z.re()));
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (is_zero(z.im())) {
    if (z.re() >= 0) return Complex(sqrt(z.re()));
    return {Real(0L), sqrt(-z.re())};
  }
  Real r = abs(z);
  if (z.re() >= 0) {
    Real u = sqrt((r + z.re()) / 2);
    return {u, z.im() / (2 * u)};
  }
  Real v = sqrt((r - z.re()) / 2);
  if (sign(z.im()) < 0) v = -v;
  return {z.im() / (2 * v), v};
}

Complex pow(const Complex& base, const Complex& e) {
  if (is_zero(base.re()) && is_zero(base.im())) {
    if (e.re() > 0) return Complex(Real(0L));
    throw DomainError("0 raised to a power with nonpositive real part");
  }
  return exp(e * log(base));
}

Complex pow(const Real& base, const Complex& e) {
  if (!(base > 0)) return pow(Complex(base), e);
  Real lb = log(base);
  return exp(e * lb);
}

Complex pow(const Complex& base, long e) {
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  Complex result(1L), b = base;
  while (k) {
    if (k & 1UL) result = result * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return inv ? reciprocal(result) : result;
}

Complex sin(const Complex& z) {
  Real s = fresh(), c = fresh();
  sin_cos(z.re(), s, c);
  return {s * cosh(z.im()), c * sinh(z.im())};
}

Complex cos(const Complex& z) {
  Real s = fresh(), c = fresh();
  sin_cos(z.re(), s, c);
  return {c * cosh(z.im()), -(s * sinh(z.im()))};
}

Complex asin(const Complex& z) {
  if (is_zero(z.im()) && abs(z.re()) <= 1) return Complex(asin(z.re()));
  Bits outer = working_bits();
  Complex w;
  {
    PrecisionScope guard(outer + 64);
    Complex one_minus = Complex(1L) - z * z;
    Complex inner = mul_i(z) + sqrt(one_minus);
    Complex l = log(inner);
    w = Complex(l.im(), -l.re());  // -i * log(...)
  }
  w.re().round_to(outer);
  w.im().round_to(outer);
  return w;
}

std::string to_string(const Complex& z, int digits) {
  if (is_zero(z.im())) return to_string(z.re(), digits);
  std::string im = to_string(abs(z.im()), digits);
  return to_string(z.re(), digits) + (sign(z.im()) < 0 ? " - " : " + ") + im + "i";
}

}  // namespace szeta::mp
