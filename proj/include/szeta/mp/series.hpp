#pragma once

// Truncated power series sum_k c[k] x^k with coefficient type Real or Complex.
// Every operation keeps the length of its first argument.

#include <cstddef>
#include <vector>

#include "szeta/errors.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::mp::series {

template <class T>
using Series = std::vector<T>;

inline bool is_zero_coeff(const Real& x) { return is_zero(x); }
inline bool is_zero_coeff(const Complex& z) { return is_zero(z.re()) && is_zero(z.im()); }

template <class T>
Series<T> zeros(std::size_t n) {
  return Series<T>(n, T(0L));
}

template <class T>
Series<T> add(const Series<T>& a, const Series<T>& b) {
  Series<T> r = a;
  for (std::size_t i = 0; i < r.size() && i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Series<T> scale(const Series<T>& a, const T& c) {
  Series<T> r = a;
  for (auto& x : r) x = x * c;
  return r;
}

template <class T>
Series<T> mul(const Series<T>& a, const Series<T>& b) {
  std::size_t n = a.size();
  Series<T> r = zeros<T>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_coeff(a[i])) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// 1/a, requires a[0] != 0.
template <class T>
Series<T> inverse(const Series<T>& a) {
  std::size_t n = a.size();
  if (n == 0) return {};
  if (is_zero_coeff(a[0])) throw DomainError("series inverse with zero constant term");
  Series<T> r = zeros<T>(n);
  T inv0 = T(1L) / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    T s(0L);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -(s * inv0);
  }
  return r;
}

/// a' (same length, top coefficient zero).
template <class T>
Series<T> derivative(const Series<T>& a) {
  Series<T> r = zeros<T>(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<long>(k);
  return r;
}

/// log a for a[0] = 1 (constant term of the result is 0).
template <class T>
Series<T> log1(const Series<T>& a) {
  std::size_t n = a.size();
  Series<T> r = zeros<T>(n);
  if (n == 0) return r;
  if (!(a[0] == T(1L))) throw DomainError("series log needs constant term 1");
  // k a_k = sum_{j=1}^{k} j r_j a_{k-j}
  for (std::size_t k = 1; k < n; ++k) {
    T s = a[k] * static_cast<long>(k);
    for (std::size_t j = 1; j < k; ++j) s -= r[j] * a[k - j] * static_cast<long>(j);
    r[k] = s / static_cast<long>(k);
  }
  return r;
}

/// exp a for a[0] = 0.
template <class T>
Series<T> exp0(const Series<T>& a) {
  std::size_t n = a.size();
  Series<T> r = zeros<T>(n);
  if (n == 0) return r;
  r[0] = T(1L);
  for (std::size_t k = 1; k < n; ++k) {
    T s(0L);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j] * static_cast<long>(j);
    r[k] = s / static_cast<long>(k);
  }
  return r;
}

/// f(g(x)) for g[0] = 0, by Horner's rule.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
  std::size_t n = g.size();
  if (n > 0 && !is_zero_coeff(g[0])) throw DomainError("composition needs g(0) = 0");
  Series<T> r = zeros<T>(n);
  for (std::size_t k = f.size(); k-- > 0;) {
    r = mul(r, g);
    if (n > 0) r[0] += f[k];
  }
  return r;
}

/// (1 + a)^p for a[0] = 0 and real exponent p.
template <class T>
Series<T> pow1(const Series<T>& a, const Real& p) {
  std::size_t n = a.size();
  Series<T> one = a;
  if (n > 0) one[0] = T(1L);
  Series<T> l = log1(one);
  for (auto& c : l) c = c * p;
  return exp0(l);
}

}  // namespace szeta::mp::series
