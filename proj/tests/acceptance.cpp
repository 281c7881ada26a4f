// One PASS/FAIL line per acceptance criterion.  Reference values computed here
// come from code in this file, not from the library routes under test.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "szeta/keiper_li/keiper_li.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/hurwitz.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/superzeta/superzeta.hpp"
#include "szeta/verify/verify.hpp"
#include "szeta/zeros/zeros.hpp"

using namespace szeta;
using mp::Complex;
using mp::PrecisionContext;
using mp::PrecisionScope;
using mp::Rational;
using mp::Real;
namespace kl = keiper_li;
namespace sz = superzeta;

namespace {

// Gamma(1/4) and zeta(1/2), standard constants
const char* kGammaQuarter = "3.6256099082219083119306851558676720029951676828800654674333799956991924353872912";
const char* kZetaHalf = "-1.4603545088095868128894991525152980125083779038017117526942181660543066987156529";

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Runs one criterion; an exception counts as a failure.
void criterion(int id, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, pass, what, detail);
}

std::string s(const Real& x, int d = 4) { return mp::to_string(x, d); }

// Bernoulli numbers from sum_{k<=n} C(n+1,k) B_k = 0
std::vector<Rational> bernoulli_oracle(long n) {
  std::vector<Rational> b{Rational(1)};
  for (long m = 1; m <= n; ++m) {
    Rational acc;
    for (long k = 0; k < m; ++k) acc += Rational(mp::binomial(m + 1, k)) * b[k];
    Rational v = -acc / Rational(m + 1);
    v.canonicalize();
    b.push_back(v);
  }
  return b;
}

Rational bernoulli_poly_oracle(long n, const Rational& w, const std::vector<Rational>& b) {
  Rational acc, p(1);
  // sum_k C(n,k) B_k w^{n-k}, summed from the top power down
  for (long k = n; k >= 0; --k) {
    acc += Rational(mp::binomial(n, k)) * b[k] * p;
    p *= w;
  }
  acc.canonicalize();
  return acc;
}

// Euler numbers from sum_k C(2n,2k) E_{2k} = 0
std::vector<Rational> euler_oracle(long n) {
  std::vector<Rational> e{Rational(1)};
  for (long m = 1; m <= n; ++m) {
    Rational acc;
    for (long k = 0; k < m; ++k) acc += Rational(mp::binomial(2 * m, 2 * k)) * e[k];
    e.push_back(-acc);
  }
  return e;
}

}  // namespace

int main() {
  PrecisionContext ctx;
  ctx.bits = 192;
  ctx.target_digits = 30;
  PrecisionScope scope(ctx.bits);

  criterion(1, "exact rational special values", [&](std::string& d) {
    Rational zero(0), h(1, 2);
    struct Case {
      const char* label;
      Rational got, want;
    };
    std::vector<Case> cases = {
        {"Z_A(0|0)", sz::za_rational(0, zero), Rational(7, 4)},
        {"Z_A(0|1/2)", sz::za_rational(0, h), Rational(2)},
        {"Z_B(0|0)", sz::zb_rational(0, zero), Rational(7, 8)},
        {"Z_B(0|1/2)", sz::zb_rational(0, h), Rational(7, 8)},
        {"Z_B(0|3/7)", sz::zb_rational(0, Rational(3, 7)), Rational(7, 8)},
        {"Z_A(-1|0)", sz::za_rational(1, zero), Rational(-1, 48)},
        {"Z_A(-2|0)", sz::za_rational(2, zero), Rational(9, 16)},
        {"Z_A(-1|1/2)", sz::za_rational(1, h), Rational(11, 12)},
        {"Z_B(-1|1/2)", sz::zb_rational(1, h), Rational(-1, 16)},
        {"Z_B(-1|0)", sz::zb_rational(1, zero), Rational(-9, 32)},
    };
    for (const auto& c : cases)
      if (c.got != c.want) {
        d = std::string(c.label) + " = " + mp::to_string(c.got);
        return false;
      }
    d = std::to_string(cases.size()) + " values exact";
    return true;
  });

  criterion(2, "Hurwitz layer", [&](std::string& d) {
    auto b = bernoulli_oracle(10);
    for (const char* ws : {"1/4", "1/2", "1", "5/4"}) {
      Rational w = mp::parse_rational(ws);
      auto rows = sz::table_column(sz::Family::hurwitz, w, -8, 0, ctx);
      for (const auto& r : rows) {
        if (r.quantity != sz::Quantity::value) continue;
        long n = -r.argument;
        Rational want = -bernoulli_poly_oracle(n + 1, w, b) / Rational(n + 1);
        want.canonicalize();
        if (!r.exact() || std::get<Rational>(r.payload) != want) {
          d = "zeta(-" + std::to_string(n) + ", " + ws + ") = " + r.payload_string(20);
          return false;
        }
        auto v = mp::hurwitz_zeta(Complex(Real(-n)), mp::to_real(w), 0, ctx);
        if (mp::agreeing_digits(v.value.re(), mp::to_real(want), Real(1L)) < 40) {
          d = "numeric zeta(-" + std::to_string(n) + ", " + ws + ") off";
          return false;
        }
      }
    }
    double worst = 1e9;
    Real sqrt2pi = mp::sqrt(2 * mp::pi());
    Real gammas[] = {Real::parse(kGammaQuarter), Real(1L), mp::sqrt(mp::pi()) / 2};
    const char* ws[] = {"1/4", "1", "3/2"};
    for (int i = 0; i < 3; ++i) {
      auto dz = mp::hurwitz_zeta(Complex(0L), Real::parse(ws[i]), 1, ctx);
      worst = std::min(worst, mp::agreeing_digits(dz.value.re(), mp::log(gammas[i] / sqrt2pi), Real(1L)));
    }
    std::ostringstream o;
    o << "rows exact for n <= 8; zeta'(0,w) agrees to " << static_cast<int>(worst) << " digits";
    d = o.str();
    return worst >= 30;
  });

  criterion(3, "transcendental cross-routes", [&](std::string& d) {
    Real closed = mp::log(mp::pow(Real(2L), Real(11L) / 4) * mp::sqrt(mp::pi()) /
                          (Real::parse(kGammaQuarter) * mp::abs(Real::parse(kZetaHalf))));
    double a = mp::agreeing_digits(sz::za_deriv0(Real(0L), ctx).value, closed, Real(0L));
    double a2 = mp::agreeing_digits(sz::za_deriv0_at_zero_closed(ctx).value, closed, Real(0L));
    double b = mp::agreeing_digits(sz::za_deriv0(Real(1L) / 2, ctx).value, mp::log(Real(2L)) / 2, Real(0L));
    double c = mp::agreeing_digits(sz::zb_deriv0(Real(1L) / 2, ctx).value, mp::log(8 * mp::pi()) / 4, Real(0L));
    std::ostringstream o;
    o << "digits: Z_A'(0|0) " << static_cast<int>(a) << "/" << static_cast<int>(a2) << ", Z_A'(0|1/2) "
      << static_cast<int>(b) << ", Z_B'(0|1/2) " << static_cast<int>(c);
    d = o.str();
    return std::min({a, a2, b, c}) >= 30;
  });

  // shared lambda data
  PrecisionContext fixed = ctx;
  fixed.escalation = mp::Escalation::fixed;
  std::vector<kl::LambdaSeries> bin, comp;
  for (auto v : {kl::Variant::classic, kl::Variant::central}) {
    bin.push_back(kl::lambda_binomial(v, 300, fixed));
    comp.push_back(kl::lambda_composition(v, 256, fixed));
  }

  criterion(4, "first lambda values", [&](std::string& d) {
    PrecisionScope sc(bin[0].precision_used.back());
    Real l1 = 1L - mp::log(4 * mp::pi()) / 2 + mp::euler_gamma() / 2;
    double a = mp::agreeing_digits(bin[0].at(1), l1, Real(0L));
    long c1 = std::lround(mp::to_double(bin[1].at(1)) * 1e7);
    long c2 = std::lround(mp::to_double(bin[1].at(2)) * 1e7);
    std::ostringstream o;
    o << "lambda_1 to " << static_cast<int>(a) << " digits; lambda_1^0 = " << s(bin[1].at(1), 7)
      << ", lambda_2^0 = " << s(bin[1].at(2), 7);
    d = o.str();
    return a >= 25 && c1 == 231050 && c2 == 923828;
  });

  zeros::ZeroSet found = zeros::find_zeros(2000, fixed.with_bits(128));

  criterion(5, "route agreement", [&](std::string& d) {
    double worst = 1e9;
    for (int i = 0; i < 2; ++i)
      for (long n = 1; n <= 256; ++n) worst = std::min(worst, mp::agreeing_digits(bin[i].at(n), comp[i].at(n), Real(0L)));
    if (worst < 12) {
      d = "binomial vs composition only " + std::to_string(worst) + " digits";
      return false;
    }
    double worst_ratio = 0, worst_contour = 0;
    for (int i = 0; i < 2; ++i) {
      for (long n = 1; n <= 20; ++n) {
        auto e = kl::lambda_direct(bin[i].variant, n, found, ctx, true);
        Real gap = mp::abs(e.value - bin[i].at(n));
        double r = mp::to_double(gap / e.error);
        worst_ratio = std::max(worst_ratio, r);
      }
      for (long n = 1; n <= 4; ++n) {
        auto c = kl::lambda_contour(bin[i].variant, n, found, ctx);
        worst_contour = std::max(worst_contour, std::abs(mp::to_double(c.value / bin[i].at(n)) - 1));
      }
    }
    std::ostringstream o;
    o << "binomial/composition " << static_cast<int>(worst) << " digits; direct gap/bound max " << worst_ratio
      << "; contour rel " << worst_contour;
    d = o.str();
    return worst_ratio <= 1 && worst_contour <= 1e-4;
  });

  criterion(6, "second-kind conversion identity", [&](std::string& d) {
    double worst = 1e9;
    for (const char* ts : {"0.5", "1", "1.5"})
      for (long m = 1; m <= 8; ++m) {
        Real t = Real::parse(ts);
        worst = std::min(worst, mp::agreeing_digits(sz::zb_positive_zba(m, t, ctx).value,
                                                    sz::zb_positive_t2(m, t, ctx).value, Real(0L)));
      }
    // confluent structure: Z_B_0(m) = (-1)^m Z_A_0(2m)/2, exactly on the rationals
    for (long m = 0; m <= 8; ++m) {
      Rational want = sz::za_rational(2 * m, Rational(0)) / 2;
      if (m % 2) want = -want;
      if (sz::zb_rational(m, Rational(0)) != want) {
        d = "confluent rational m=" + std::to_string(m);
        return false;
      }
    }
    double conf = 1e9;
    for (long m = 1; m <= 8; ++m)
      conf = std::min(conf, mp::agreeing_digits(sz::zb_positive_z1e(m, ctx).value,
                                                sz::zb_positive_t2(m, Real(0L), ctx).value, Real(0L)));
    std::ostringstream o;
    o << "conversion vs d/d(t^2) " << static_cast<int>(worst) << " digits; confluent " << static_cast<int>(conf)
      << " digits";
    d = o.str();
    return worst >= 12 && conf >= 12;
  });

  criterion(7, "continuation", [&](std::string& d) {
    std::ostringstream o;
    for (long k : {0L, -1L, -2L}) {
      auto l = sz::za_continuation_limit(k, Real(1L), ctx);
      Real want = mp::to_real(sz::za_rational(-k, Rational(1)));
      Real gap = mp::abs(l.value - want);
      if (!(gap <= l.error)) {
        d = "s=" + std::to_string(k) + " gap " + s(gap) + " > error " + s(l.error);
        return false;
      }
    }
    Real h = mp::pow2(-30);
    Real r = -h * sz::za_continuation(Complex(1L - h), Real(1L), ctx).value.re();
    o << "limits match; (s-1) Z_A(s|1) at s = 1 - 2^-30: " << s(r, 12);
    d = o.str();
    return mp::abs(r + Real(1L) / 2) <= Real::parse("1e-6");
  });

  criterion(8, "pole probe", [&](std::string& d) {
    std::vector<Real> eps;
    for (const char* e : {"0.01", "0.015", "0.02", "0.03", "0.04", "0.05"}) eps.push_back(Real::parse(e));
    auto f = sz::zb_pole_probe(eps, found, Real(0L), ctx);
    Real a0 = 1L / (8 * mp::pi()), b0 = -mp::log(2 * mp::pi()) / (4 * mp::pi());
    Real ra = mp::abs(f.a / a0 - 1L), rb = mp::abs(f.b / b0 - 1L);
    d = "a = " + s(f.a, 8) + " (rel " + s(ra, 2) + "), b = " + s(f.b, 8) + " (rel " + s(rb, 2) + ")";
    return ra <= Real::parse("0.01") && rb <= Real::parse("0.05");
  });

  criterion(9, "tempered asymptotics", [&](std::string& d) {
    std::ostringstream o;
    bool ok = true;
    for (const auto& b : bin) {
      PrecisionScope sc(b.precision_used.back());
      double m1 = 0, m2 = 0;
      for (long n = 100; n <= 256; ++n) {
        Real nn(n);
        Real tempered = nn * (mp::log(nn) - 1L + mp::euler_gamma() - mp::log(2 * mp::pi())) / 2;
        double r = std::abs(mp::to_double((b.at(n) - tempered) / nn));
        if (n < 200) m1 = std::max(m1, r);
        else m2 = std::max(m2, r);
      }
      ok = ok && std::max(m1, m2) <= 0.05 && m2 < m1;
      o << kl::to_string(b.variant) << " octave maxima " << m1 << ", " << m2 << "; ";
    }
    d = o.str();
    return ok;
  });

  criterion(10, "counterfactual growth rate", [&](std::string& d) {
    zeros::ZeroSet toy = verify::toy_set();
    // planted beta = 0.9 at ordinate 5: tau = 5 - 0.4i and its conjugate
    std::complex<double> taus[] = {{5.0, -0.4}, {5.0, 0.4}};
    double classic_rate = 0, central_rate = 0;
    for (auto t : taus) {
      std::complex<double> ih(0, 0.5);
      classic_rate = std::max(classic_rate, std::log(std::abs((t + ih) / (t - ih))));
      // y/(1-y)^2 = -tau^2: tau^2 y^2 + (1 - 2 tau^2) y + tau^2 = 0
      std::complex<double> a = t * t, b = 1.0 - 2.0 * t * t;
      std::complex<double> disc = std::sqrt(b * b - 4.0 * a * a);
      for (auto y : {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)})
        central_rate = std::max(central_rate, -std::log(std::abs(y)));
    }
    std::ostringstream o;
    bool ok = true;
    PrecisionContext c = fixed.with_bits(128);
    for (auto v : {kl::Variant::classic, kl::Variant::central}) {
      auto series = kl::lambda_direct_series(v, 600, toy, c, false);
      auto rep = kl::criterion_report(series, 1, 600, zeros::AsymptoticModel::riemann(), &toy);
      double want = v == kl::Variant::classic ? classic_rate : central_rate;
      double got = rep.fitted_growth_rate.value_or(0);
      bool flagged = rep.classification == kl::Classification::violation_signature;
      ok = ok && flagged && std::abs(got / want - 1) <= 0.01;
      o << kl::to_string(v) << " " << kl::to_string(rep.classification) << " rate " << got << " vs " << want << "; ";
    }
    d = o.str();
    return ok;
  });

  criterion(11, "positivity", [&](std::string& d) {
    for (const auto& b : bin)
      for (long n = 1; n <= 300; ++n)
        if (!(b.at(n) > 0L)) {
          d = kl::to_string(b.variant) + " lambda_" + std::to_string(n) + " = " + s(b.at(n));
          return false;
        }
    d = "lambda_n > 0 and lambda_n^0 > 0 for n <= 300";
    return true;
  });

  criterion(12, "zeros", [&](std::string& d) {
    auto again = zeros::find_zeros(2, fixed.with_bits(256));
    PrecisionScope sc(256);
    double g1 = mp::agreeing_digits(found.entries[0].gamma, again.entries[0].gamma, Real(0L));
    double g2 = mp::agreeing_digits(found.entries[1].gamma, again.entries[1].gamma, Real(0L));
    bool printed = std::abs(mp::to_double(found.entries[0].gamma) - 14.134725) < 5e-7 &&
                   std::abs(mp::to_double(found.entries[1].gamma) - 21.022040) < 5e-7;
    // sup over T <= 500 of |N(T) - estimate|: the estimate is smooth, so the
    // sup sits at T = 500, at the minimum T = 2 pi, or on either side of a jump
    Real worst;
    auto probe = [&](const Real& T, long N) {
      Real gap = mp::abs(Real(N) - zeros::counting_estimate(T, found.model));
      if (gap > worst) worst = gap;
    };
    Real top(500L);
    probe(top, zeros::count_below(found, top));
    probe(2 * mp::pi(), 0);
    long below = 0;
    for (const auto& e : found.entries) {
      if (e.gamma > top) break;
      probe(e.gamma, below);
      below += e.multiplicity;
      probe(e.gamma, below);
    }
    std::ostringstream o;
    o << "gamma_1 = " << s(found.entries[0].gamma, 12) << ", gamma_2 = " << s(found.entries[1].gamma, 12)
      << " (rerun agreement " << static_cast<int>(std::min(g1, g2)) << " digits); sup |N - estimate| = "
      << s(worst, 4);
    d = o.str();
    return g1 >= 10 && g2 >= 10 && printed && worst <= 2L;
  });

  return failures == 0 ? 0 : 1;
}
