#include "szeta/keiper_li/keiper_li.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "szeta/errors.hpp"
#include "szeta/mp/gamma.hpp"
#include "szeta/mp/quadrature.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/mp/series.hpp"
#include "szeta/superzeta/superzeta.hpp"
#include "szeta/xi/xi.hpp"

namespace szeta::keiper_li {

using mp::PrecisionScope;
using xi::Tag;

namespace {

Real half() { return Real(1L) / 2; }

PrecisionContext fixed_bits(const PrecisionContext& ctx, Bits bits) {
  PrecisionContext c = ctx;
  c.escalation = mp::Escalation::fixed;
  c.bits = bits;
  c.max_bits = std::max(c.max_bits, bits);
  return c;
}

// Per-n ingredients of the binomial sum: lambda_n / n = sum_m w(n, m) u_m with
// w = -(-1)^m C(m+n-1, 2m-1) (classic, u_m = Z_B_*(m)/m) or C(m+n-1, 2m-1)
// (central, u_m = (log Xi)^{(2m)}(1/2)/(2m)!).
struct Ingredients {
  std::vector<Real> u;  // u[m], m = 1..n_max
};

Ingredients ingredients(Variant v, long n_max, const PrecisionContext& c) {
  Ingredients in;
  in.u.assign(static_cast<size_t>(n_max) + 1, Real(0L));
  if (v == Variant::classic) {
    auto za = superzeta::za_positive_range(n_max, half(), c);
    PrecisionScope scope(c.bits);
    for (long m = 1; m <= n_max; ++m) {
      // conversion formula at 2t = 1
      Real zb;
      for (long k = 1; k <= m; ++k) zb += mp::to_real(mp::binomial(2 * m - k - 1, m - 1)) * za[k - 1].value;
      in.u[m] = zb / m;
    }
  } else {
    auto s = xi::log_deriv_series(Tag::log_xi, half(), 2 * n_max, c);
    PrecisionScope scope(c.bits);
    for (long m = 1; m <= n_max; ++m) in.u[m] = s.c[2 * m - 1] / (2 * m);
  }
  return in;
}

Real weight(Variant v, long n, long m) {
  Real w = mp::to_real(mp::binomial(m + n - 1, 2 * m - 1));
  if (v == Variant::classic && m % 2 == 0) w = -w;
  return w;
}

double cancellation(Variant v, const Ingredients& in, long n, const Real& lambda) {
  PrecisionScope scope(64);
  Real biggest;
  for (long m = 1; m <= n; ++m) biggest = mp::max(biggest, mp::abs(weight(v, n, m) * in.u[m]));
  Real l = mp::abs(lambda) / n;
  if (mp::is_zero(l) || mp::is_zero(biggest)) return 0.0;
  return std::max(0.0, mp::to_double(mp::log10(biggest / l)));
}

std::vector<Real> binomial_run(Variant v, long n_max, const PrecisionContext& c, std::vector<double>* canc) {
  Ingredients in = ingredients(v, n_max, c);
  PrecisionScope scope(c.bits);
  std::vector<Real> out;
  for (long n = 1; n <= n_max; ++n) {
    Real sum;
    for (long m = 1; m <= n; ++m) sum += weight(v, n, m) * in.u[m];
    out.push_back(sum * n);
    if (canc) canc->push_back(cancellation(v, in, n, out.back()));
  }
  return out;
}

std::vector<Real> composition_run(Variant v, long n_max, const PrecisionContext& c, std::vector<double>* canc) {
  namespace S = mp::series;
  const size_t len = static_cast<size_t>(n_max) + 1;
  S::Series<Real> f(len, Real(0L)), g(len, Real(0L));
  if (v == Variant::classic) {
    // log Xi(1/(1-z)) = log Xi(1 + y), y = z/(1-z)
    auto s = xi::log_deriv_series(Tag::log_xi, Real(1L), n_max, c);
    PrecisionScope scope(c.bits);
    for (long k = 1; k <= n_max; ++k) {
      f[k] = s.c[k - 1] / k;
      g[k] = Real(1L);
    }
  } else {
    // log Xi(1/2 + t) as a series in w = t^2, then w = y/(1-y)^2
    auto s = xi::log_deriv_series(Tag::log_xi, half(), 2 * n_max, c);
    PrecisionScope scope(c.bits);
    for (long k = 1; k <= n_max; ++k) {
      f[k] = s.c[2 * k - 1] / (2 * k);
      g[k] = Real(k);
    }
  }
  PrecisionScope scope(c.bits);
  S::Series<Real> h = S::compose(f, g);
  std::vector<Real> out;
  for (long n = 1; n <= n_max; ++n) out.push_back(h[n] * n);
  if (canc) {
    Ingredients in = ingredients(v, n_max, c);
    for (long n = 1; n <= n_max; ++n) canc->push_back(cancellation(v, in, n, out[n - 1]));
  }
  return out;
}

using Runner = std::vector<Real> (*)(Variant, long, const PrecisionContext&, std::vector<double>*);

LambdaSeries escalated(Variant v, long n_max, const PrecisionContext& ctx, LambdaMethod method, Runner run) {
  ctx.validate();
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  Bits start = std::max(ctx.bits, binomial_bits(n_max));
  LambdaSeries out;
  out.variant = v;
  out.method = method;
  if (ctx.escalation == mp::Escalation::fixed) {
    out.values = run(v, n_max, fixed_bits(ctx, start), &out.cancellation_digits);
    PrecisionScope scope(start);
    for (const auto& x : out.values) out.errors.push_back(mp::abs(x) * mp::pow2(-(start - 8)));
    out.precision_used.assign(out.values.size(), start);
    return out;
  }
  int digits = ctx.target_digits > 0 ? ctx.target_digits : 20;
  Bits cap = std::max(ctx.max_bits, 4 * start);
  for (Bits b = start; b <= cap; b *= 2) {
    std::vector<double> canc;
    auto lo = run(v, n_max, fixed_bits(ctx, b), nullptr);
    auto hi = run(v, n_max, fixed_bits(ctx, b + 64), &canc);
    PrecisionScope scope(b + 64);
    bool ok = true;
    std::vector<Real> err;
    for (long i = 0; i < n_max; ++i) {
      Real d = mp::abs(hi[i] - lo[i]);
      err.push_back(d);
      if (mp::agreeing_digits(hi[i], lo[i], Real(0L)) < digits) ok = false;
    }
    if (ok) {
      out.values = std::move(hi);
      out.errors = std::move(err);
      out.cancellation_digits = std::move(canc);
      out.precision_used.assign(out.values.size(), b + 64);
      return out;
    }
  }
  throw ConvergenceError("lambda precision escalation exhausted for n_max = " + std::to_string(n_max));
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::classic ? "classic" : "central"; }

std::string to_string(LambdaMethod m) {
  switch (m) {
    case LambdaMethod::binomial_sum: return "binomial_sum";
    case LambdaMethod::series_composition: return "series_composition";
    case LambdaMethod::direct_zero_sum: return "direct_zero_sum";
    case LambdaMethod::contour: return "contour";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "classic") return Variant::classic;
  if (s == "central") return Variant::central;
  throw DomainError("unknown variant '" + s + "'");
}

const Real& LambdaSeries::at(long n) const {
  if (n < n_first || n > n_last()) throw DomainError("lambda index outside the series");
  return values[static_cast<size_t>(n - n_first)];
}

const Real& LambdaSeries::error_at(long n) const {
  if (n < n_first || n > n_last()) throw DomainError("lambda index outside the series");
  return errors[static_cast<size_t>(n - n_first)];
}

Bits binomial_bits(long n_max) { return static_cast<Bits>(std::ceil(3.5 * static_cast<double>(n_max))) + 128; }

LambdaSeries lambda_binomial(Variant v, long n_max, const PrecisionContext& ctx) {
  return escalated(v, n_max, ctx, LambdaMethod::binomial_sum, &binomial_run);
}

LambdaSeries lambda_composition(Variant v, long n_max, const PrecisionContext& ctx) {
  return escalated(v, n_max, ctx, LambdaMethod::series_composition, &composition_run);
}

Estimate<Real> lambda_direct(Variant v, long n, const zeros::ZeroSet& set, const PrecisionContext& ctx, bool tail) {
  if (set.empty()) throw DomainError("direct lambda needs a nonempty zero set");
  auto kind = v == Variant::classic ? zeros::SumKind::lambda(n) : zeros::SumKind::lambda0(n);
  auto r = zeros::zero_sum(kind, set, tail, ctx);
  return {r.value.re(), r.error, r.bits};
}

LambdaSeries lambda_direct_series(Variant v, long n_max, const zeros::ZeroSet& set, const PrecisionContext& ctx,
                                  bool tail) {
  LambdaSeries out;
  out.variant = v;
  out.method = LambdaMethod::direct_zero_sum;
  for (long n = 1; n <= n_max; ++n) {
    auto r = lambda_direct(v, n, set, ctx, tail);
    out.values.push_back(r.value);
    out.errors.push_back(r.error);
    out.precision_used.push_back(ctx.bits);
    out.cancellation_digits.push_back(0.0);  // sums of nonnegative terms on the line
  }
  return out;
}

Estimate<Real> lambda_contour(Variant v, long n, const zeros::ZeroSet& set, const PrecisionContext& ctx) {
  if (n < 1 || n > 6) throw DomainError("contour route is limited to 1 <= n <= 6");
  if (set.empty()) throw DomainError("contour route needs a zero set");
  if (!(set.complete_below > 0)) throw TailUnavailableError("contour route needs a certified zero set");
  PrecisionScope scope(ctx.bits);
  Real t = v == Variant::classic ? half() : Real(0L);
  // circle through 3/4 and n + 1/4: encloses 1..n, stays in Re s > 1/2
  Real centre = Real(n + 1L) / 2;
  Real radius = Real(n) / 2 - Real(1L) / 4;
  std::vector<std::pair<Real, int>> logs;
  for (const auto& [tau, mult] : set.taus()) {
    if (!mp::is_real(tau)) throw DomainError("contour route takes on-line zero sets");
    logs.emplace_back(mp::log(mp::sqr(tau.re()) + mp::sqr(t)), mult);
  }
  zeros::ZeroSet tail_only;
  tail_only.complete_below = set.complete_below;
  Real worst_sum_error;
  auto integrand = [&](const Real& phi) {
    Complex e = mp::expi(phi);
    Complex s = Complex(centre) + e * radius;
    Complex z(0L);
    for (const auto& [l, mult] : logs) z += mp::exp(-(s * l)) * static_cast<long>(mult);
    auto tail = zeros::zero_sum(zeros::SumKind::zb(s, t), tail_only, true, ctx);
    z += tail.value;
    // Gamma(s+n) Gamma(s-n) = Gamma(s)^2 prod_{j<n}(s+j) / prod_{j=1..n}(s-j)
    Complex ratio(1L);
    for (long j = 0; j < n; ++j) ratio = ratio * (s + j) / (s - (j + 1));
    Complex g = mp::exp(mp::log_gamma(s) * 2 - mp::log_gamma(s * 2 + 1L)) * ratio;
    Real w = mp::abs(g * radius);
    worst_sum_error = mp::max(worst_sum_error, w * tail.error);
    return g * z * mp::mul_i(e * radius);
  };
  auto q = mp::periodic_mean(integrand, Real(1L) / 1000000000000L, 32, 1L << 12);
  // contour integral = 2 pi mean; prefactor (-1)^n n i / pi
  Complex val = mp::mul_i(q.value) * (2 * n);
  if (n % 2 == 1) val = -val;
  Real err = (q.error + worst_sum_error) * (2 * n);
  return {val.re(), err, ctx.bits};
}

Real predict_tempered(long n, const zeros::AsymptoticModel& model) {
  if (n < 1) throw DomainError("n must be >= 1");
  Real ln = mp::log(Real(n));
  return 2 * mp::pi() * n * (2 * model.r_minus2 * (ln - 1L + mp::euler_gamma()) + model.r_minus1);
}

Oscillation predict_oscillation(const zeros::ZeroSet& set, Variant v, long n) {
  Oscillation out;
  out.total = Complex(0L);
  for (const auto& e : set.entries) {
    if (e.on_line()) continue;
    Complex tau = mp::conj(e.tau());  // Im tau > 0
    Complex q;
    if (v == Variant::classic) {
      Complex ih(Real(0L), half());
      q = (tau + ih) / (tau - ih);
    } else {
      q = mp::exp(mp::mul_i(zeros::theta(tau)));
    }
    Complex qn = mp::pow(q, n);
    Complex term = -(qn + mp::conj(qn)) * static_cast<long>(e.multiplicity);
    out.terms.push_back(term);
    out.rates.push_back(mp::log(mp::abs(q)));
    out.total += term;
  }
  if (out.terms.empty()) throw DomainError("zero set has no off-line entry");
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::rh_consistent: return "RH-consistent";
    case Classification::violation_signature: return "violation-signature";
    case Classification::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct PronyFit {
  double rate = 0;          // log|z| of the dominant oscillatory mode
  double relative_error = 1;
  bool oscillatory = false;
};

// Linear prediction of order p on r, modes from the companion matrix, then a
// least-squares amplitude fit to measure how well the modes explain r.
PronyFit prony(const std::vector<double>& r, int p) {
  PronyFit fit;
  const int N = static_cast<int>(r.size());
  if (N < 3 * p) return fit;
  double scale = 0;
  for (double x : r) scale = std::max(scale, std::abs(x));
  if (scale == 0) return fit;
  Eigen::MatrixXd A(N - p, p);
  Eigen::VectorXd b(N - p);
  for (int k = p; k < N; ++k) {
    for (int j = 1; j <= p; ++j) A(k - p, j - 1) = r[k - j] / scale;
    b(k - p) = r[k] / scale;
  }
  Eigen::VectorXd a = A.colPivHouseholderQr().solve(b);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(p, p);
  for (int j = 0; j < p; ++j) C(0, j) = a(j);
  for (int j = 1; j < p; ++j) C(j, j - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  Eigen::VectorXcd z = es.eigenvalues();
  double best = -1e300;
  for (int j = 0; j < p; ++j) {
    if (std::abs(z(j).imag()) < 1e-9) continue;
    double lr = std::log(std::abs(z(j)));
    if (lr > best) best = lr;
  }
  if (best > -1e299) {
    fit.oscillatory = true;
    fit.rate = best;
  }
  // amplitudes against z_j^k, k = 0..N-1, scaled so the last sample has modulus <= 1
  Eigen::MatrixXcd V(N, p);
  for (int j = 0; j < p; ++j) {
    std::complex<double> zj = z(j);
    double m = std::abs(zj);
    std::complex<double> norm = m > 1 ? std::pow(zj, N - 1) : 1.0;
    for (int k = 0; k < N; ++k) V(k, j) = std::pow(zj, k) / norm;
  }
  Eigen::VectorXcd y(N);
  for (int k = 0; k < N; ++k) y(k) = r[k] / scale;
  Eigen::VectorXcd c = V.colPivHouseholderQr().solve(y);
  fit.relative_error = (V * c - y).norm() / y.norm();
  return fit;
}

}  // namespace

CriterionReport criterion_report(const LambdaSeries& series, long n_lo, long n_hi, const zeros::AsymptoticModel& model,
                                 const zeros::ZeroSet* set) {
  CriterionReport rep;
  rep.variant = series.variant;
  rep.n_lo = std::max(n_lo, series.n_first);
  rep.n_hi = std::min(n_hi, series.n_last());
  std::vector<double> raw;
  for (long n = rep.n_lo; n <= rep.n_hi; ++n) {
    PrecisionScope scope(std::max<Bits>(series.at(n).precision(), 64));
    Real d = series.at(n) - predict_tempered(n, model);
    rep.n.push_back(n);
    rep.residuals.push_back(d / n);
    raw.push_back(mp::to_double(d));
  }
  if (set != nullptr && std::any_of(set->entries.begin(), set->entries.end(), [](const auto& e) { return !e.on_line(); })) {
    auto osc = predict_oscillation(*set, series.variant, 1);
    double best = -1e300;
    for (const auto& r : osc.rates) best = std::max(best, mp::to_double(r));
    rep.predicted_growth_rate = best;
  }
  if (rep.residuals.size() < 16) {
    rep.classification = Classification::inconclusive;
    rep.note = "too few residuals";
    return rep;
  }
  for (long lo = rep.n_lo; lo <= rep.n_hi; lo *= 2) {
    double m = 0;
    for (size_t i = 0; i < rep.n.size(); ++i)
      if (rep.n[i] >= lo && rep.n[i] < 2 * lo) m = std::max(m, std::abs(mp::to_double(rep.residuals[i])));
    rep.octave_max.push_back(m);
    if (lo == 0) break;
  }
  PronyFit fit = prony(raw, 5);
  if (fit.oscillatory) {
    rep.fitted_growth_rate = fit.rate;
    rep.fit_relative_error = fit.relative_error;
  }
  double span = static_cast<double>(rep.n_hi - rep.n_lo);
  bool growing = fit.oscillatory && fit.rate > 0 && std::exp(fit.rate * span) >= 10.0;
  if (growing && fit.relative_error < 0.1) {
    rep.classification = Classification::violation_signature;
    rep.note = "exponentially growing oscillation in the residual";
    return rep;
  }
  bool decreasing = rep.octave_max.size() >= 2;
  for (size_t i = 1; i < rep.octave_max.size(); ++i) decreasing = decreasing && rep.octave_max[i] <= rep.octave_max[i - 1];
  if (decreasing) {
    rep.classification = Classification::rh_consistent;
    rep.note = "residual/n decreasing across octaves";
  } else {
    rep.classification = Classification::inconclusive;
    rep.note = "no growing mode, but residual/n not decreasing";
  }
  return rep;
}

}  // namespace szeta::keiper_li
