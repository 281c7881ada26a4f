#include "szeta/mp/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "szeta/errors.hpp"

namespace szeta::mp {

namespace {

std::mutex g_mutex;
std::vector<Rational> g_even;  // g_even[k] = B_{2k}
std::vector<BigInt> g_euler;   // g_euler[k] = E_{2k}

// Tangent numbers T_1..T_m in place (Brent and Harvey), then B_{2k}.
void build_even(long m) {
  std::vector<BigInt> t(static_cast<size_t>(m) + 1);
  t[1] = 1;
  for (long k = 2; k <= m; ++k) t[k] = (k - 1) * t[k - 1];
  for (long k = 2; k <= m; ++k)
    for (long j = k; j <= m; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  g_even.assign(static_cast<size_t>(m) + 1, Rational(0));
  g_even[0] = 1;
  for (long k = 1; k <= m; ++k) {
    BigInt four_k = BigInt(1) << static_cast<mp_bitcnt_t>(2 * k);
    Rational b(2 * k * t[k], four_k * (four_k - 1));
    b.canonicalize();
    g_even[k] = (k % 2 == 1) ? b : Rational(-b);
  }
}

}  // namespace

Rational bernoulli_number(long n) {
  if (n < 0) throw DomainError("negative Bernoulli index");
  if (n == 0) return 1;
  if (n == 1) return Rational(-1, 2);
  if (n % 2 == 1) return 0;
  long k = n / 2;
  std::lock_guard<std::mutex> lock(g_mutex);
  if (static_cast<long>(g_even.size()) <= k) build_even(std::max<long>({k, 2 * static_cast<long>(g_even.size()), 8L}));
  return g_even[k];
}

Rational bernoulli_poly(long n, const Rational& w) {
  if (n < 0) throw DomainError("negative Bernoulli index");
  Rational sum = 0, wp = 1;  // w^{n-k} built from k = n downward
  for (long k = n; k >= 0; --k) {
    Rational b = bernoulli_number(k);
    if (b != 0) sum += Rational(binomial(n, k)) * b * wp;
    wp *= w;
  }
  sum.canonicalize();
  return sum;
}

BigInt euler_number(long n) {
  if (n < 0 || n % 2 != 0) throw DomainError("Euler numbers are defined here for even n >= 0 only");
  long k = n / 2;
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_euler.empty()) g_euler.push_back(1);
  while (static_cast<long>(g_euler.size()) <= k) {
    long m = 2 * static_cast<long>(g_euler.size());
    BigInt s = 0;
    for (long j = 0; 2 * j < m; ++j) s += binomial(m, 2 * j) * g_euler[j];
    g_euler.push_back(-s);
  }
  return g_euler[k];
}

}  // namespace szeta::mp
