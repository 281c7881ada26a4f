#include "szeta/zeros/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "szeta/errors.hpp"
#include "szeta/mp/bernoulli.hpp"
#include "szeta/mp/quadrature.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/xi/xi.hpp"

namespace szeta::zeros {

using mp::Bits;
using mp::PrecisionScope;

namespace {

Real half() { return Real(1L) / 2; }

}  // namespace

bool ZeroEntry::on_line() const { return beta == half(); }

Complex ZeroEntry::tau() const { return {gamma, -(beta - half())}; }

AsymptoticModel AsymptoticModel::riemann() {
  AsymptoticModel m;
  m.r_minus2 = 1L / (8 * mp::pi());
  m.r_minus1 = -mp::log(2 * mp::pi()) / (4 * mp::pi());
  return m;
}

std::vector<std::pair<Complex, int>> ZeroSet::taus() const {
  std::vector<std::pair<Complex, int>> out;
  out.reserve(entries.size() * 2);
  for (const auto& e : entries) {
    Complex t = e.tau();
    out.emplace_back(t, e.multiplicity);
    if (!e.on_line()) out.emplace_back(mp::conj(t), e.multiplicity);
  }
  return out;
}

std::vector<Complex> ZeroSet::rhos() const {
  std::vector<Complex> out;
  for (const auto& e : entries) {
    std::vector<Complex> q;
    q.emplace_back(e.beta, e.gamma);
    q.emplace_back(e.beta, -e.gamma);
    if (!e.on_line()) {
      q.emplace_back(1L - e.beta, e.gamma);
      q.emplace_back(1L - e.beta, -e.gamma);
    }
    for (int m = 0; m < e.multiplicity; ++m) out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

std::string canonical_form(const std::vector<Complex>& rhos, int digits) {
  std::vector<std::string> items;
  items.reserve(rhos.size());
  for (const auto& r : rhos) {
    // fixed-point rendering so that equal values print identically
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%+.*Rf%+.*Rfi", digits, r.re().raw(), digits, r.im().raw());
    items.emplace_back(buf);
    mpfr_free_str(buf);
  }
  std::sort(items.begin(), items.end());
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

ZeroSet from_ordinates(const std::vector<Real>& gammas, const Real& complete_below, Provenance p) {
  ZeroSet set;
  for (const auto& g : gammas) {
    if (!(g > 0)) throw DomainError("ordinates must be positive");
    set.entries.push_back({half(), g, 1, p});
  }
  std::sort(set.entries.begin(), set.entries.end(), [](const ZeroEntry& a, const ZeroEntry& b) { return a.gamma < b.gamma; });
  set.complete_below = complete_below;
  set.synthetic = p == Provenance::synthetic;
  return set;
}

// ---------------------------------------------------------------------------
// Zero finding.

namespace {

const std::vector<double>& bernoulli_over_factorial_double() {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    mp::Rational f = 1;
    for (long j = 1; j <= 60; ++j) {
      f *= mp::Rational((2 * j - 1) * (2 * j));
      mp::Rational b = mp::bernoulli_number(2 * j) / f;
      t.push_back(b.get_d());
    }
    return t;
  }();
  return table;
}

double theta_double(double t) {
  double t2 = t * t;
  return t / 2 * std::log(t / (2 * M_PI)) - t / 2 - M_PI / 8 + 1 / (48 * t) + 7 / (5760 * t * t2) +
         31 / (80640 * t * t2 * t2) + 127 / (430080 * t * t2 * t2 * t2);
}

std::complex<double> zeta_half_double(double t) {
  using C = std::complex<double>;
  C s(0.5, t);
  long N = static_cast<long>(t / M_PI) + 10;
  C sum = 0;
  for (long n = 1; n < N; ++n) {
    double l = std::log(static_cast<double>(n));
    sum += std::exp(-0.5 * l) * C(std::cos(t * l), -std::sin(t * l));
  }
  double a = static_cast<double>(N);
  double la = std::log(a);
  C apow = std::exp(-0.5 * la) * C(std::cos(t * la), -std::sin(t * la));  // a^{-s}
  sum += apow * a / (s - 1.0) + apow / 2.0;
  const auto& b = bernoulli_over_factorial_double();
  C poch = s;  // (s)_{2j-1}
  double ap = 1 / a;
  for (long j = 1; j <= static_cast<long>(b.size()); ++j) {
    if (j > 1) {
      poch *= (s + static_cast<double>(2 * j - 3)) * (s + static_cast<double>(2 * j - 2));
      ap /= a * a;
    }
    C term = b[j - 1] * poch * ap * apow;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double mean_gap(double t) { return 2 * M_PI / std::log(std::max(t, 20.0) / (2 * M_PI)); }

struct Bracket {
  double lo, hi, zlo, zhi;
};

// Sign changes of Z on [t0, ...) until `want` brackets, plus probes of local
// minima of |Z| that might hide a close pair.
std::vector<Bracket> scan(long want, double t0, double refine) {
  std::vector<Bracket> out;
  double t = t0;
  double zp = hardy_z_double(t);
  double tpp = t, zpp = zp;
  bool have_pp = false;
  while (static_cast<long>(out.size()) < want) {
    double step = mean_gap(t) / refine;
    double tn = t + step;
    double zn = hardy_z_double(tn);
    if ((zp < 0) != (zn < 0)) {
      out.push_back({t, tn, zp, zn});
    } else if (have_pp && (zpp < 0) == (zp < 0) && std::abs(zp) < std::abs(zpp) && std::abs(zp) < std::abs(zn)) {
      // |Z| dipped without a sign change: subdivide [tpp, tn]
      const int parts = 24;
      double a = tpp, za = zpp;
      std::vector<Bracket> found;
      for (int i = 1; i <= parts; ++i) {
        double b = tpp + (tn - tpp) * i / parts;
        double zb = hardy_z_double(b);
        if ((za < 0) != (zb < 0)) found.push_back({a, b, za, zb});
        a = b;
        za = zb;
      }
      if (!found.empty()) {
        // bracket list must stay sorted: drop anything already recorded inside [tpp, tn]
        while (!out.empty() && out.back().hi > tpp) out.pop_back();
        for (auto& f : found) out.push_back(f);
      }
    }
    tpp = t;
    zpp = zp;
    have_pp = true;
    t = tn;
    zp = zn;
  }
  return out;
}

double illinois_double(const Bracket& br) {
  double a = br.lo, b = br.hi, fa = br.zlo, fb = br.zhi;
  int side = 0;
  for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
    double c = (a * fb - b * fa) / (fb - fa);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    double fc = hardy_z_double(c);
    if (fc == 0) return c;
    if ((fc < 0) == (fb < 0)) {
      b = c;
      fb = fc;
      if (side == -1) fa /= 2;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb /= 2;
      side = 1;
    }
  }
  return 0.5 * (a + b);
}

// Illinois on [a, b] in working precision until the bracket is below 2^-(bits-8) b.
Real illinois_mp(Real a, Real b, Real fa, Real fb) {
  Bits bits = mp::working_bits();
  Real tol = mp::pow2(-(bits - 8)) * b;
  int side = 0;
  for (int it = 0; it < 400; ++it) {
    if (b - a <= tol) break;
    Real c = (a * fb - b * fa) / (fb - fa);
    if (!(c > a && c < b)) c = (a + b) / 2;
    Real fc = xi::hardy_z(c);
    if (mp::is_zero(fc)) return c;
    if (mp::sign(fc) == mp::sign(fb)) {
      b = c;
      fb = fc;
      if (side == -1) fa /= 2;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb /= 2;
      side = 1;
    }
  }
  return (a + b) / 2;
}

Real refine_mp(const Bracket& br, double guess) {
  // bracket the double-precision root tightly, widening until Z changes sign
  for (double delta = 1e-11 * std::max(1.0, guess); delta < (br.hi - br.lo); delta *= 16) {
    Real a(std::max(br.lo, guess - delta)), b(std::min(br.hi, guess + delta));
    Real fa = xi::hardy_z(a), fb = xi::hardy_z(b);
    if (mp::sign(fa) * mp::sign(fb) < 0) return illinois_mp(a, b, fa, fb);
  }
  Real a(br.lo), b(br.hi);
  Real fa = xi::hardy_z(a), fb = xi::hardy_z(b);
  if (mp::sign(fa) * mp::sign(fb) >= 0)
    throw ConvergenceError("sign of Z indeterminate near t = " + std::to_string(guess));
  return illinois_mp(a, b, fa, fb);
}

}  // namespace

double hardy_z_double(double t) {
  std::complex<double> z = zeta_half_double(t);
  double th = theta_double(t);
  return (std::complex<double>(std::cos(th), std::sin(th)) * z).real();
}

ZeroSet find_zeros(long K, const PrecisionContext& ctx) {
  ctx.validate();
  if (K < 1) throw DomainError("need K >= 1");
  if (K > 20000) throw DomainError("K beyond desk scale");
  std::vector<Bracket> br;
  bool ok = false;
  for (double refine : {6.0, 12.0, 24.0}) {
    br = scan(K + 1, 10.0, refine);
    // one bracket beyond the K-th zero; count at the midpoint between them
    double mid = 0.5 * (br[K - 1].hi + br[K].lo);
    PrecisionScope scope(64);
    Real est = counting_estimate(Real(mid), AsymptoticModel::riemann());
    // the smooth estimate omits the constant 7/8 of the Riemann-von Mangoldt formula
    double diff = static_cast<double>(K) - mp::to_double(est) - 0.875;
    if (std::abs(diff) < 2) {
      ok = true;
      break;
    }
  }
  if (!ok) throw MissedZeroError("zero count disagrees with the counting estimate after grid refinement");

  ZeroSet set;
  PrecisionScope scope(ctx.bits);
  for (long k = 0; k < K; ++k) {
    double guess = illinois_double(br[k]);
    Real g = refine_mp(br[k], guess);
    set.entries.push_back({half(), g, 1, Provenance::found});
  }
  set.complete_below = set.entries.back().gamma;
  return set;
}

// ---------------------------------------------------------------------------
// Files.

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

ZeroSet parse_text(std::istream& in) {
  ZeroSet set;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      const std::string key = "complete_below:";
      if (body.rfind(key, 0) == 0) {
        try {
          set.complete_below = Real::parse(trim(body.substr(key.size())));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), lineno);
        }
      }
      continue;
    }
    Real g;
    try {
      g = Real::parse(t);
    } catch (const ParseError&) {
      throw ParseError("not an ordinate: '" + t + "'", lineno);
    }
    if (!(g > 0)) throw ParseError("ordinate must be positive", lineno);
    set.entries.push_back({half(), g, 1, Provenance::file});
  }
  return set;
}

Real json_number(const nlohmann::json& v, const char* what) {
  if (v.is_number_integer()) return Real(v.get<long>());
  if (v.is_number()) {
    // reparse the shortest round-trip decimal so 0.9 becomes the decimal 0.9, not its double
    return Real::parse(v.dump());
  }
  if (v.is_string()) return Real::parse(v.get<std::string>());
  throw ParseError(std::string("field '") + what + "' must be a number");
}

ZeroSet parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("zero set must be a JSON object");
  ZeroSet set;
  if (doc.contains("complete_below")) set.complete_below = json_number(doc["complete_below"], "complete_below");
  if (!doc.contains("zeros")) return set;
  if (!doc["zeros"].is_array()) throw ParseError("'zeros' must be an array");
  struct Raw {
    Real beta, gamma;
    int mult;
    bool flipped;
  };
  std::map<std::string, std::vector<Raw>> groups;
  for (const auto& z : doc["zeros"]) {
    if (!z.is_object() || !z.contains("gamma")) throw ParseError("each zero needs a 'gamma'");
    Real beta = z.contains("beta") ? json_number(z["beta"], "beta") : half();
    Real gamma = json_number(z["gamma"], "gamma");
    long mult = 1;
    if (z.contains("mult")) {
      if (!z["mult"].is_number_integer()) throw ParseError("'mult' must be an integer");
      mult = z["mult"].get<long>();
    }
    if (mult < 1) throw ParseError("'mult' must be >= 1");
    if (!(beta > 0 && beta < 1)) throw ParseError("beta outside the critical strip");
    if (mp::is_zero(gamma)) throw SymmetryError("a real zero has no partner with positive ordinate");
    if (gamma < 0) gamma = -gamma;
    bool flipped = beta < half();
    if (flipped) beta = 1L - beta;
    std::string key = mp::to_string(beta, 30) + "|" + mp::to_string(gamma, 30);
    groups[key].push_back({beta, gamma, static_cast<int>(mult), flipped});
  }
  for (auto& [key, list] : groups) {
    // listing both rho and its mirror is allowed only with equal multiplicities
    int direct = 0, mirror = 0;
    for (const auto& r : list) (r.flipped ? mirror : direct) += r.mult;
    if (direct > 0 && mirror > 0 && direct != mirror)
      throw SymmetryError("zero listed with its mirror image at a different multiplicity");
    int mult = std::max(direct, mirror);
    const auto& r = list.front();
    Provenance p = r.beta == half() ? Provenance::file : Provenance::synthetic;
    set.entries.push_back({r.beta, r.gamma, mult, p});
    if (p == Provenance::synthetic) set.synthetic = true;
  }
  std::sort(set.entries.begin(), set.entries.end(), [](const ZeroEntry& a, const ZeroEntry& b) {
    return a.gamma < b.gamma || (a.gamma == b.gamma && a.beta < b.beta);
  });
  return set;
}

}  // namespace

ZeroSet parse_zeros(std::istream& in, Format format) {
  ZeroSet set = format == Format::ordinates_text ? parse_text(in) : parse_json(in);
  std::stable_sort(set.entries.begin(), set.entries.end(),
                   [](const ZeroEntry& a, const ZeroEntry& b) { return a.gamma < b.gamma; });
  return set;
}

ZeroSet load_zeros(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_zeros(in, format);
}

void write_zeros(std::ostream& out, const ZeroSet& set, Format format, int digits) {
  if (format == Format::ordinates_text) {
    bool any_off = std::any_of(set.entries.begin(), set.entries.end(), [](const ZeroEntry& e) { return !e.on_line(); });
    if (any_off) throw DomainError("off-line zeros need the JSON format");
    out << "# complete_below: " << mp::to_string(set.complete_below, digits) << "\n";
    for (const auto& e : set.entries)
      for (int m = 0; m < e.multiplicity; ++m) out << mp::to_string(e.gamma, digits) << "\n";
    return;
  }
  std::string body = "{\n  \"complete_below\": " + mp::to_string(set.complete_below, digits) + ",\n  \"zeros\": [";
  for (size_t i = 0; i < set.entries.size(); ++i) {
    const auto& e = set.entries[i];
    body += (i ? ",\n    " : "\n    ");
    body += "{\"beta\": " + mp::to_string(e.beta, digits) + ", \"gamma\": " + mp::to_string(e.gamma, digits) +
            ", \"mult\": " + std::to_string(e.multiplicity) + "}";
  }
  body += set.entries.empty() ? "]\n}\n" : "\n  ]\n}\n";
  out << body;
}

void save_zeros(const std::string& path, const ZeroSet& set, Format format, int digits) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_zeros(out, set, format, digits);
}

Format format_for_path(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return Format::zeroset_json;
  return Format::ordinates_text;
}

// ---------------------------------------------------------------------------
// Counting, planting.

Real counting_estimate(const Real& T, const AsymptoticModel& model) {
  if (!(T > 0)) throw DomainError("T must be positive");
  return 2 * T * (2 * model.r_minus2 * (mp::log(T) - 1L) + model.r_minus1);
}

long count_below(const ZeroSet& set, const Real& T) {
  long c = 0;
  for (const auto& e : set.entries)
    if (e.gamma <= T) c += e.multiplicity * (e.on_line() ? 1 : 2);
  return c;
}

ZeroSet plant_offline(const ZeroSet& base, long k, const Real& beta_new) {
  if (k < 1 || k > static_cast<long>(base.entries.size())) throw DomainError("zero index out of range");
  if (!(beta_new >= half() && beta_new < 1L)) throw DomainError("planted beta must lie in [1/2, 1)");
  ZeroSet out = base;
  auto& e = out.entries[static_cast<size_t>(k - 1)];
  if (!e.on_line()) throw DomainError("entry is already off the critical line");
  if (beta_new == half()) return out;
  e.beta = beta_new;
  e.provenance = Provenance::synthetic;
  out.synthetic = true;
  return out;
}

ZeroSet remove_entry(const ZeroSet& base, long k) {
  if (k < 1 || k > static_cast<long>(base.entries.size())) throw DomainError("zero index out of range");
  ZeroSet out = base;
  out.entries.erase(out.entries.begin() + (k - 1));
  return out;
}

// ---------------------------------------------------------------------------
// Sums.

SumKind SumKind::za(long n, const Real& t) {
  SumKind k;
  k.type = Type::ZA;
  k.n = n;
  k.shift = t;
  return k;
}
SumKind SumKind::zb(const Complex& sigma, const Real& t) {
  SumKind k;
  k.type = Type::ZB;
  k.s = sigma;
  k.shift = t;
  return k;
}
SumKind SumKind::zc(const Complex& s, const Real& tau) {
  SumKind k;
  k.type = Type::ZC;
  k.s = s;
  k.shift = tau;
  return k;
}
SumKind SumKind::lambda(long n) {
  SumKind k;
  k.type = Type::lambda;
  k.n = n;
  return k;
}
SumKind SumKind::lambda0(long n) {
  SumKind k;
  k.type = Type::lambda0;
  k.n = n;
  return k;
}

Complex theta(const Complex& tau) { return mp::asin(mp::reciprocal(tau * 2)) * 2; }

Complex theta(const ZeroEntry& entry) { return theta(entry.tau()); }

Complex summand(const SumKind& kind, const Complex& tau) {
  switch (kind.type) {
    case SumKind::Type::ZA: {
      Complex a = Complex(kind.shift) - mp::mul_i(tau);
      Complex b = Complex(kind.shift) + mp::mul_i(tau);
      return mp::pow(a, -kind.n) + mp::pow(b, -kind.n);
    }
    case SumKind::Type::ZB:
      return mp::pow(tau * tau + Complex(mp::sqr(kind.shift)), -kind.s);
    case SumKind::Type::ZC:
      return mp::pow(tau + Complex(kind.shift), -kind.s);
    case SumKind::Type::lambda: {
      Complex ih(Real(0L), half());
      Complex q = (tau + ih) / (tau - ih);
      Complex qn = mp::pow(q, kind.n);
      return Complex(2L) - qn - mp::reciprocal(qn);
    }
    case SumKind::Type::lambda0: {
      Complex th = theta(tau);
      return Complex(2L) - mp::cos(th * kind.n) * 2;
    }
  }
  return Complex(0L);
}

namespace {

// I(a) = int_T^inf (1/2pi) log(tau/2pi) tau^{-a} d tau
Complex density_moment(const Complex& a, const Real& T) {
  Complex am1 = a - 1L;
  Complex inv = mp::reciprocal(am1);
  Complex p = mp::pow(T, Complex(1L) - a);
  return p * (mp::log(T / (2 * mp::pi())) * inv + inv * inv) / (2 * mp::pi());
}

// sum_j C(-e, j) x^j I(base + step j)
Complex binomial_tail(const Complex& e, const Complex& x, const Complex& base, long step, const Real& T) {
  Real eps = mp::pow2(-mp::working_bits());
  Complex coef(1L), xp(1L), sum(0L);
  for (long j = 0; j < 100000; ++j) {
    if (j > 0) {
      coef = coef * (-(e + (j - 1))) / j;
      xp = xp * x;
    }
    Complex term = coef * xp * density_moment(base + step * j, T);
    sum += term;
    if (j > 2 && mp::magnitude(term) <= eps * mp::magnitude(sum)) break;
  }
  return sum;
}

Complex tail_integral(const SumKind& kind, const Real& T) {
  switch (kind.type) {
    case SumKind::Type::ZA: {
      // 2 Re (t + i tau)^{-n} = 2 Re[(i tau)^{-n} (1 + t/(i tau))^{-n}]
      Complex in = mp::pow(Complex(Real(0L), Real(1L)), -kind.n);
      Complex x = Complex(Real(0L), -kind.shift);  // t/i
      Complex s = binomial_tail(Complex(kind.n), x, Complex(kind.n), 1, T) * in;
      return Complex(s.re() * 2);
    }
    case SumKind::Type::ZB:
      return binomial_tail(kind.s, Complex(mp::sqr(kind.shift)), kind.s * 2, 2, T);
    case SumKind::Type::ZC:
      return binomial_tail(kind.s, Complex(kind.shift), kind.s, 1, T);
    case SumKind::Type::lambda:
    case SumKind::Type::lambda0: {
      Real eps = mp::pow2(-mp::working_bits());
      SumKind k = kind;
      auto f = [&](const Real& tau) {
        return summand(k, Complex(tau)) * (mp::log(tau / (2 * mp::pi())) / (2 * mp::pi()));
      };
      auto r = mp::exp_sinh(f, T, eps * 1024);
      return r.value;
    }
  }
  return Complex(0L);
}

void check_convergent(const SumKind& kind) {
  switch (kind.type) {
    case SumKind::Type::ZA:
      if (kind.n < 1) throw DomainError("first-kind zero sum diverges for n < 1");
      break;
    case SumKind::Type::ZB:
      if (!(kind.s.re() > half())) throw DomainError("second-kind zero sum needs Re sigma > 1/2");
      break;
    case SumKind::Type::ZC:
      if (!(kind.s.re() > 1L)) throw DomainError("third-kind zero sum needs Re s > 1");
      break;
    case SumKind::Type::lambda:
    case SumKind::Type::lambda0:
      if (kind.n < 1) throw DomainError("lambda index must be >= 1");
      break;
  }
}

}  // namespace

Estimate<Complex> zero_sum(const SumKind& kind, const ZeroSet& set, bool tail, const PrecisionContext& ctx) {
  ctx.validate();
  check_convergent(kind);
  if (tail && !(set.complete_below > 0))
    throw TailUnavailableError("tail correction needs a certification height (complete_below)");
  PrecisionScope scope(ctx.bits);
  Complex sum(0L);
  Real absum;
  for (const auto& [tau, mult] : set.taus()) {
    Complex v = summand(kind, tau) * static_cast<long>(mult);
    sum += v;
    absum += mp::magnitude(v);
  }
  Estimate<Complex> out;
  out.bits = ctx.bits;
  out.error = absum * mp::pow2(-(ctx.bits - 8));
  if (tail) {
    Complex t = tail_integral(kind, set.complete_below);
    sum += t;
    // the smooth density ignores the fluctuating part of the count; the tail
    // itself and one summand at the cut bound that
    out.error += mp::abs(t) + 2 * mp::abs(summand(kind, Complex(set.complete_below)));
  }
  out.value = sum;
  return out;
}

}  // namespace szeta::zeros
