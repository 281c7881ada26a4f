#include "doctest.h"

#include "szeta/errors.hpp"
#include "szeta/verify/verify.hpp"

using namespace szeta;
using namespace szeta::verify;

namespace {

SuiteOptions options() {
  SuiteOptions o;
  o.ctx.bits = 192;
  o.ctx.target_digits = 30;
  return o;
}

void expect_all_pass(Suite s) {
  auto results = run_suite(s, options());
  CHECK_FALSE(results.empty());
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
    CHECK_FALSE(r.name.empty());
  }
}

}  // namespace

TEST_CASE("suite names") {
  for (Suite s : {Suite::tables, Suite::identities, Suite::continuation, Suite::poles, Suite::lambda})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS((void)parse_suite("everything"), DomainError);
  CHECK(needs_zeros(Suite::poles));
  CHECK(needs_zeros(Suite::lambda));
  CHECK_FALSE(needs_zeros(Suite::tables));
}

TEST_CASE("tables suite") { expect_all_pass(Suite::tables); }
TEST_CASE("identities suite") { expect_all_pass(Suite::identities); }
TEST_CASE("continuation suite") { expect_all_pass(Suite::continuation); }

TEST_CASE("a suite that needs zeros refuses to run without them") {
  CHECK_THROWS_AS((void)run_suite(Suite::poles, options()), DomainError);
}

TEST_CASE("planted set") {
  auto toy = toy_set();
  CHECK(toy.size() == 51);
  CHECK(toy.synthetic);
  long off = 0;
  for (const auto& e : toy.entries) off += e.on_line() ? 0 : 1;
  CHECK(off == 1);
}
