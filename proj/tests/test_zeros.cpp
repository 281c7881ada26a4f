#include "doctest.h"

#include <cmath>
#include <sstream>

#include "szeta/errors.hpp"
#include "szeta/xi/xi.hpp"
#include "szeta/zeros/zeros.hpp"

using namespace szeta;
using namespace szeta::mp;
using namespace szeta::zeros;

namespace {

PrecisionContext ctx(Bits bits = 128) {
  PrecisionContext c;
  c.bits = bits;
  c.target_digits = 25;
  return c;
}

ZeroSet from_json(const std::string& text) {
  std::istringstream in(text);
  return parse_zeros(in, Format::zeroset_json);
}

ZeroSet from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_zeros(in, Format::ordinates_text);
}

// first five ordinates, published to 30 digits
const char* kOrdinates[] = {"14.134725141734693790457251983562", "21.022039638771554992628479593897",
                            "25.010857580145688763213790992563", "30.424876125859513210311897530584",
                            "32.935061587739189690662368964075"};

}  // namespace

TEST_CASE("first zeros") {
  PrecisionScope scope(128);
  auto z = find_zeros(5, ctx());
  REQUIRE(z.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(agreeing_digits(z.entries[i].gamma, Real::parse(kOrdinates[i]), Real(0L)) >= 28);
    CHECK(z.entries[i].on_line());
  }
  CHECK_FALSE(z.synthetic);
  CHECK(z.complete_below >= z.entries.back().gamma);
  // the double-precision Z used by the scan agrees with the multiprecision one
  for (double t : {15.0, 40.5, 99.0}) CHECK(std::abs(hardy_z_double(t) - to_double(xi::hardy_z(Real(t)))) < 1e-9);
}

TEST_CASE("text and JSON parsing") {
  PrecisionScope scope(128);
  auto t = from_text("# comment\n14.134725\n\n21.022040\n");
  REQUIRE(t.size() == 2);
  CHECK(to_double(t.entries[1].gamma) == doctest::Approx(21.02204));
  CHECK_THROWS_AS((void)from_text("14.1\nfoo\n"), ParseError);
  try {
    (void)from_text("14.1\n-3\n");
    FAIL("negative ordinate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  auto j = from_json(R"({"complete_below": 30, "zeros": [{"gamma": 21}, {"beta": 0.3, "gamma": -7, "mult": 2}]})");
  REQUIRE(j.size() == 2);
  // beta = 0.3 is folded to the representative 0.7 with positive ordinate
  CHECK(to_double(j.entries[0].beta) == doctest::Approx(0.7));
  CHECK(to_double(j.entries[0].gamma) == doctest::Approx(7));
  CHECK(j.entries[0].multiplicity == 2);
  CHECK(j.synthetic);
  CHECK(to_double(j.complete_below) == 30);
}

TEST_CASE("malformed zero sets") {
  CHECK_THROWS_AS((void)from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"beta\": 0.5}]}"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"beta\": 1.2, \"gamma\": 3}]}"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"beta\": 0, \"gamma\": 3}]}"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"gamma\": 3, \"mult\": 0}]}"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"gamma\": 3, \"mult\": 1.5}]}"), ParseError);
  CHECK_THROWS_AS((void)from_json("{\"zeros\": [{\"gamma\": 0}]}"), SymmetryError);
  CHECK_THROWS_AS((void)from_json(R"({"zeros": [{"beta": 0.8, "gamma": 4}, {"beta": 0.2, "gamma": 4, "mult": 2}]})"),
                  SymmetryError);
  // a zero listed with its mirror at equal multiplicity is one quadruple
  auto ok = from_json(R"({"zeros": [{"beta": 0.8, "gamma": 4}, {"beta": 0.2, "gamma": -4}]})");
  CHECK(ok.size() == 1);
  CHECK_THROWS_AS((void)load_zeros("/nonexistent/zeros.txt", Format::ordinates_text), ParseError);
}

TEST_CASE("quadruple closure and canonical form") {
  PrecisionScope scope(128);
  auto z = from_json(R"({"zeros": [{"beta": 0.75, "gamma": 9}, {"gamma": 12}]})");
  auto rhos = z.rhos();
  CHECK(rhos.size() == 6);
  // the multiset is closed under rho -> 1 - rho and rho -> conj(rho)
  std::vector<Complex> mirrored, conjugated;
  for (const auto& r : rhos) {
    mirrored.emplace_back(1L - r.re(), -r.im());
    conjugated.push_back(conj(r));
  }
  CHECK(canonical_form(mirrored) == canonical_form(rhos));
  CHECK(canonical_form(conjugated) == canonical_form(rhos));
  auto taus = z.taus();
  CHECK(taus.size() == 3);
  for (const auto& [tau, m] : taus) CHECK(tau.re() > 0L);
}

TEST_CASE("counting") {
  PrecisionScope scope(128);
  auto z = from_ordinates({Real(3L), Real(5L), Real(8L)}, Real(8L));
  CHECK(count_below(z, Real(4L)) == 1);
  CHECK(count_below(z, Real(5L)) == 2);
  CHECK(count_below(z, Real(100L)) == 3);
  auto p = plant_offline(z, 2, Real::parse("0.9"));
  CHECK(count_below(p, Real(6L)) == 3);
  CHECK(p.synthetic);
  CHECK_THROWS_AS((void)plant_offline(z, 4, Real::parse("0.9")), DomainError);
  CHECK_THROWS_AS((void)plant_offline(z, 1, Real::parse("1.2")), DomainError);
  CHECK(remove_entry(z, 1).size() == 2);
  // N(T) estimate 2T[2 R(log T - 1) + R'] = (T/2pi)(log(T/2pi) - 1) for the Riemann constants
  Real T(500L);
  Real want = T / (2 * pi()) * (log(T / (2 * pi())) - 1L);
  CHECK(agreeing_digits(counting_estimate(T, AsymptoticModel::riemann()), want, Real(1L)) >= 30);
}

TEST_CASE("sums over a zero set") {
  PrecisionScope scope(128);
  auto z = from_json(R"({"zeros": [{"beta": 0.75, "gamma": 9}, {"gamma": 12}, {"gamma": 20, "mult": 2}]})");
  // oracle: sums over every rho written out in the test
  Real lam1, zb_half, zb0;
  for (const auto& r : z.rhos()) {
    Complex inv = reciprocal(r);
    lam1 += inv.re();
  }
  for (const auto& [tau, m] : z.taus()) {
    // one term per pair +-tau
    Complex t2 = tau * tau;
    zb_half += m * reciprocal(Complex(t2.re() + Real(1L) / 4, t2.im())).re();
    zb0 += m * reciprocal(t2).re();
  }
  auto c = ctx();
  auto l = zero_sum(SumKind::lambda(1), z, false, c);
  CHECK(agreeing_digits(l.value.re(), lam1, Real(0L)) >= 30);
  CHECK(agreeing_digits(zero_sum(SumKind::zb(Complex(1L), Real(1L) / 2), z, false, c).value.re(), zb_half, Real(0L)) >= 30);
  CHECK(agreeing_digits(zero_sum(SumKind::zb(Complex(1L), Real(0L)), z, false, c).value.re(), zb0, Real(0L)) >= 30);
  // sum_rho 1/rho = Z_B(1|1/2) and the central analogue = Z_B(1|0), zero set by zero set
  CHECK(agreeing_digits(lam1, zb_half, Real(0L)) >= 30);
  CHECK(agreeing_digits(zero_sum(SumKind::lambda0(1), z, false, c).value.re(), zb0, Real(0L)) >= 30);
  CHECK_THROWS_AS((void)zero_sum(SumKind::zb(Complex(1L), Real(0L)), z, true, c), TailUnavailableError);
}

TEST_CASE("tail correction closes the gap to the full sum") {
  PrecisionScope scope(128);
  auto z = find_zeros(100, ctx());
  // sum over all zeros of 1/(1/4 + gamma^2) = 1 + gamma/2 - log(4 pi)/2
  Real full = 1L + euler_gamma() / 2 - log(4 * pi()) / 2;
  auto c = ctx();
  auto with = zero_sum(SumKind::zb(Complex(1L), Real(1L) / 2), z, true, c);
  auto without = zero_sum(SumKind::zb(Complex(1L), Real(1L) / 2), z, false, c);
  Real gap_with = abs(with.value.re() - full), gap_without = abs(without.value.re() - full);
  CHECK(gap_with <= with.error);
  CHECK(gap_with * 10L < gap_without);
}

TEST_CASE("theta") {
  PrecisionScope scope(128);
  Complex tau(Real(7L), Real::parse("-0.3"));
  // sin(theta/2) = 1/(2 tau)
  Complex s = sin(theta(tau) / Complex(2L));
  CHECK(to_double(abs(s - reciprocal(Complex(2L) * tau))) < 1e-35);
}
