#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/mp/real.hpp"

namespace szeta::zeros {

using mp::Complex;
using mp::Estimate;
using mp::PrecisionContext;
using mp::Real;

enum class Provenance { found, file, synthetic };

/// One symmetric quadruple {rho, 1-rho, conj rho, 1-conj rho} (a pair when beta = 1/2),
/// stored as rho = beta + i gamma with beta >= 1/2 and gamma > 0.
struct ZeroEntry {
  Real beta;
  Real gamma;
  int multiplicity = 1;
  Provenance provenance = Provenance::found;

  [[nodiscard]] bool on_line() const;
  /// tau = gamma - i(beta - 1/2); Re tau > 0.
  [[nodiscard]] Complex tau() const;
};

/// Pole constants (R_{-2}, R_{-1}) of the second-kind superzeta function at 1/2.
struct AsymptoticModel {
  Real r_minus2;
  Real r_minus1;
  /// R_{-2} = 1/(8 pi), R_{-1} = -log(2 pi)/(4 pi).
  static AsymptoticModel riemann();
};

struct ZeroSet {
  std::vector<ZeroEntry> entries;  // ascending gamma
  AsymptoticModel model = AsymptoticModel::riemann();
  Real complete_below;  // 0 when nothing is certified
  bool synthetic = false;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool empty() const { return entries.empty(); }
  /// Every tau with Re tau > 0 and its multiplicity; off-line entries give tau and conj tau.
  [[nodiscard]] std::vector<std::pair<Complex, int>> taus() const;
  /// All represented zeros rho, with multiplicity repeated.
  [[nodiscard]] std::vector<Complex> rhos() const;
};

/// Sorted textual form of a multiset of zeros, `digits` significant digits per part.
[[nodiscard]] std::string canonical_form(const std::vector<Complex>& rhos, int digits = 25);

/// Builds a set of on-line zeros from ordinates.
[[nodiscard]] ZeroSet from_ordinates(const std::vector<Real>& gammas, const Real& complete_below,
                                     Provenance p = Provenance::synthetic);

/// First K zeros on the critical line by sign changes of Hardy's Z, refined to ctx precision.
[[nodiscard]] ZeroSet find_zeros(long K, const PrecisionContext& ctx);

enum class Format { ordinates_text, zeroset_json };
[[nodiscard]] ZeroSet load_zeros(const std::string& path, Format format);
[[nodiscard]] ZeroSet parse_zeros(std::istream& in, Format format);
void write_zeros(std::ostream& out, const ZeroSet& set, Format format, int digits = 30);
void save_zeros(const std::string& path, const ZeroSet& set, Format format, int digits = 30);
/// Picks the format from the file extension (".json" means zeroset_json).
[[nodiscard]] Format format_for_path(const std::string& path);

/// N(T) ~ 2T[2 R_{-2}(log T - 1) + R_{-1}].
[[nodiscard]] Real counting_estimate(const Real& T, const AsymptoticModel& model);
/// Number of zero ordinates <= T, with multiplicity; off-line entries count twice.
[[nodiscard]] long count_below(const ZeroSet& set, const Real& T);

/// Replaces on-line entry k (1-based) by the quadruple with real part beta_new.
[[nodiscard]] ZeroSet plant_offline(const ZeroSet& base, long k, const Real& beta_new);
/// The set without entry k (1-based).
[[nodiscard]] ZeroSet remove_entry(const ZeroSet& base, long k);

struct SumKind {
  enum class Type { ZA, ZB, ZC, lambda, lambda0 };
  Type type = Type::ZB;
  long n = 1;       // ZA, lambda, lambda0
  Complex s;        // ZB: sigma, ZC: s
  Real shift;       // ZA, ZB: t; ZC: tau

  static SumKind za(long n, const Real& t);
  static SumKind zb(const Complex& sigma, const Real& t);
  static SumKind zc(const Complex& s, const Real& tau);
  static SumKind lambda(long n);
  static SumKind lambda0(long n);
};

/// Direct sum over the set, optionally with the smooth-density tail beyond
/// complete_below.  The error estimate includes the tail's own magnitude.
[[nodiscard]] Estimate<Complex> zero_sum(const SumKind& kind, const ZeroSet& set, bool tail,
                                         const PrecisionContext& ctx);
/// Per-tau summand of the kind, summed over the tau and its mirror partner
/// (so that the sum over Re tau > 0 gives the full quantity).
[[nodiscard]] Complex summand(const SumKind& kind, const Complex& tau);

/// theta = 2 arcsin(1/(2 tau)) for the entry's tau.
[[nodiscard]] Complex theta(const ZeroEntry& entry);
[[nodiscard]] Complex theta(const Complex& tau);

/// Hardy Z(t) in hardware double precision (scan only, t >= 10).
[[nodiscard]] double hardy_z_double(double t);

}  // namespace szeta::zeros
