#pragma once

// RAII value types over MPFR.  Every freshly produced value (constructor or
// arithmetic result) is created at the calling thread's working precision,
// which is set with PrecisionScope.  Copies keep the precision of their source.

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace szeta::mp {

using Bits = mpfr_prec_t;

[[nodiscard]] Bits working_bits() noexcept;

/// Sets the working precision of the current thread for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(Bits bits) noexcept;
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Bits saved_;
};

class Real {
 public:
  struct Uninit {};

  Real() : Real(0L) {}
  Real(long v) { init(working_bits()); mpfr_set_si(v_, v, MPFR_RNDN); }  // NOLINT
  Real(int v) : Real(static_cast<long>(v)) {}                          // NOLINT
  Real(unsigned long v) { init(working_bits()); mpfr_set_ui(v_, v, MPFR_RNDN); }  // NOLINT
  Real(unsigned v) : Real(static_cast<unsigned long>(v)) {}            // NOLINT
  explicit Real(double v) { init(working_bits()); mpfr_set_d(v_, v, MPFR_RNDN); }
  explicit Real(const mpz_class& z) { init(working_bits()); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  explicit Real(const mpq_class& q) { init(working_bits()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(Uninit, Bits bits) { init(bits); }

  Real(const Real& o) {
    init(mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    init(MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal or "p/q" literal at the working precision.
  static Real parse(std::string_view text);
  static Real nan();

  [[nodiscard]] mpfr_ptr raw() noexcept { return v_; }
  [[nodiscard]] mpfr_srcptr raw() const noexcept { return v_; }
  [[nodiscard]] Bits precision() const noexcept { return mpfr_get_prec(v_); }

  /// Rounds in place to `bits`.
  void round_to(Bits bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

 private:
  void init(Bits bits) { mpfr_init2(v_, bits); }
  mpfr_t v_;
};

inline Real fresh() { return Real(Real::Uninit{}, working_bits()); }

inline Real operator+(const Real& a, const Real& b) { Real r = fresh(); mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator-(const Real& a, const Real& b) { Real r = fresh(); mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, const Real& b) { Real r = fresh(); mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator/(const Real& a, const Real& b) { Real r = fresh(); mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator-(const Real& a) { Real r = fresh(); mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); return r; }

inline Real operator+(const Real& a, long b) { Real r = fresh(); mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator+(long b, const Real& a) { return a + b; }
inline Real operator-(const Real& a, long b) { Real r = fresh(); mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator-(long b, const Real& a) { Real r = fresh(); mpfr_si_sub(r.raw(), b, a.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long b) { Real r = fresh(); mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator*(long b, const Real& a) { return a * b; }
inline Real operator/(const Real& a, long b) { Real r = fresh(); mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator/(long b, const Real& a) { Real r = fresh(); mpfr_si_div(r.raw(), b, a.raw(), MPFR_RNDN); return r; }
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator+(int b, const Real& a) { return a + static_cast<long>(b); }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator-(int b, const Real& a) { return static_cast<long>(b) - a; }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator*(int b, const Real& a) { return a * static_cast<long>(b); }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator/(int b, const Real& a) { return static_cast<long>(b) / a; }

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
inline bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
inline bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
inline bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
inline bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }

[[nodiscard]] inline bool is_zero(const Real& x) { return mpfr_zero_p(x.raw()) != 0; }
[[nodiscard]] inline bool is_finite(const Real& x) { return mpfr_number_p(x.raw()) != 0; }
[[nodiscard]] inline bool is_integer(const Real& x) { return mpfr_integer_p(x.raw()) != 0; }
[[nodiscard]] inline int sign(const Real& x) { return mpfr_sgn(x.raw()); }
[[nodiscard]] inline double to_double(const Real& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }
[[nodiscard]] inline long to_long(const Real& x) { return mpfr_get_si(x.raw(), MPFR_RNDN); }

#define SZETA_MP_UNARY(name, fn)                 \
  inline Real name(const Real& x) {              \
    Real r = fresh();                            \
    fn(r.raw(), x.raw(), MPFR_RNDN);             \
    return r;                                    \
  }
SZETA_MP_UNARY(abs, mpfr_abs)
SZETA_MP_UNARY(sqrt, mpfr_sqrt)
SZETA_MP_UNARY(exp, mpfr_exp)
SZETA_MP_UNARY(expm1, mpfr_expm1)
SZETA_MP_UNARY(log, mpfr_log)
SZETA_MP_UNARY(log1p, mpfr_log1p)
SZETA_MP_UNARY(log10, mpfr_log10)
SZETA_MP_UNARY(sin, mpfr_sin)
SZETA_MP_UNARY(cos, mpfr_cos)
SZETA_MP_UNARY(tan, mpfr_tan)
SZETA_MP_UNARY(atan, mpfr_atan)
SZETA_MP_UNARY(asin, mpfr_asin)
SZETA_MP_UNARY(sinh, mpfr_sinh)
SZETA_MP_UNARY(cosh, mpfr_cosh)
SZETA_MP_UNARY(tanh, mpfr_tanh)
#undef SZETA_MP_UNARY

inline Real floor(const Real& x) { Real r = fresh(); mpfr_floor(r.raw(), x.raw()); return r; }
inline Real ceil(const Real& x) { Real r = fresh(); mpfr_ceil(r.raw(), x.raw()); return r; }
inline Real sqr(const Real& x) { Real r = fresh(); mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real atan2(const Real& y, const Real& x) { Real r = fresh(); mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real hypot(const Real& a, const Real& b) { Real r = fresh(); mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& b, const Real& e) { Real r = fresh(); mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& b, long e) { Real r = fresh(); mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN); return r; }
inline Real ldexp(const Real& x, long e) { Real r = fresh(); mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline void sin_cos(const Real& x, Real& s, Real& c) { mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN); }

/// Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
[[nodiscard]] inline long exponent(const Real& x) {
  if (mpfr_zero_p(x.raw())) return -(1L << 40);
  return mpfr_get_exp(x.raw());
}

[[nodiscard]] Real pi();
[[nodiscard]] Real euler_gamma();
[[nodiscard]] Real ln2();
/// 2^k at working precision (k may be negative).
[[nodiscard]] Real pow2(long k);

/// Decimal digits of agreement between a and b, relative to max(|a|, |b|, floor).
[[nodiscard]] double agreeing_digits(const Real& a, const Real& b, const Real& floor_scale);

/// Shortest "%g"-style rendering with `digits` significant decimal digits.
[[nodiscard]] std::string to_string(const Real& x, int digits);

class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)), im_(fresh_zero()) {}  // NOLINT
  Complex(long re) : re_(re), im_(0L) {}                        // NOLINT
  Complex(int re) : re_(static_cast<long>(re)), im_(0L) {}      // NOLINT
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  [[nodiscard]] const Real& re() const noexcept { return re_; }
  [[nodiscard]] const Real& im() const noexcept { return im_; }
  [[nodiscard]] Real& re() noexcept { return re_; }
  [[nodiscard]] Real& im() noexcept { return im_; }

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o) { re_ *= o; im_ *= o; return *this; }

 private:
  static Real fresh_zero() { return Real(0L); }
  Real re_;
  Real im_;
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }
inline Complex operator-(const Complex& a) { return {-a.re(), -a.im()}; }
Complex operator*(const Complex& a, const Complex& b);
inline Complex operator*(const Complex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
inline Complex operator*(const Real& b, const Complex& a) { return a * b; }
inline Complex operator*(const Complex& a, long b) { return {a.re() * b, a.im() * b}; }
inline Complex operator*(long b, const Complex& a) { return a * b; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re() / b, a.im() / b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re() / b, a.im() / b}; }
Complex operator/(const Complex& a, const Complex& b);
inline Complex operator+(const Complex& a, const Real& b) { return {a.re() + b, a.im()}; }
inline Complex operator+(const Real& b, const Complex& a) { return {a.re() + b, a.im()}; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re() - b, a.im()}; }
inline Complex operator-(const Real& b, const Complex& a) { return {b - a.re(), -a.im()}; }
inline Complex operator+(const Complex& a, long b) { return {a.re() + b, a.im()}; }
inline Complex operator-(const Complex& a, long b) { return {a.re() - b, a.im()}; }
inline Complex operator-(long b, const Complex& a) { return {b - a.re(), -a.im()}; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re() == b.re() && a.im() == b.im(); }

[[nodiscard]] inline Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
[[nodiscard]] inline Complex mul_i(const Complex& z) { return {-z.im(), z.re()}; }
[[nodiscard]] inline Real norm(const Complex& z) { return sqr(z.re()) + sqr(z.im()); }
[[nodiscard]] inline Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
[[nodiscard]] inline Real arg(const Complex& z) { return atan2(z.im(), z.re()); }
[[nodiscard]] inline bool is_real(const Complex& z) { return is_zero(z.im()); }
/// max(|re|, |im|), a cheap magnitude bound within a factor sqrt 2.
[[nodiscard]] inline Real magnitude(const Complex& z) { return max(abs(z.re()), abs(z.im())); }

[[nodiscard]] Complex reciprocal(const Complex& z);
[[nodiscard]] Complex exp(const Complex& z);
/// e^{i x} for real x.
[[nodiscard]] Complex expi(const Real& x);
[[nodiscard]] Complex log(const Complex& z);
[[nodiscard]] Complex sqrt(const Complex& z);
[[nodiscard]] Complex pow(const Complex& base, const Complex& e);
/// base^e for real base > 0.
[[nodiscard]] Complex pow(const Real& base, const Complex& e);
[[nodiscard]] Complex pow(const Complex& base, long e);
[[nodiscard]] Complex sin(const Complex& z);
[[nodiscard]] Complex cos(const Complex& z);
[[nodiscard]] Complex asin(const Complex& z);

[[nodiscard]] std::string to_string(const Complex& z, int digits);

}  // namespace szeta::mp
