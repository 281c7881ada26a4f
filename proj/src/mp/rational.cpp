#include "szeta/mp/rational.hpp"

#include <cctype>

#include "szeta/errors.hpp"

namespace szeta::mp {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Rational parse_decimal_exact(std::string s) {
  if (s.empty()) throw ParseError("empty rational");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string digits;
  long scale = 0;
  bool dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (dot) ++scale;
    } else {
      throw ParseError("not a rational: '" + s + "'");
    }
  }
  if (digits.empty()) throw ParseError("not a rational: '" + s + "'");
  Rational r(BigInt(digits, 10), 1);  // base 10: a leading 0 would mean octal
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  r /= den;
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string strip(std::string_view t) {
  std::string out;
  for (char c : t)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal_exact(s);
  Rational num = parse_decimal_exact(s.substr(0, slash));
  Rational den = parse_decimal_exact(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw DomainError("0 to a negative power");
    return rpow(Rational(1) / base, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace szeta::mp
