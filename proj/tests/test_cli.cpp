#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "szeta/cli/cli.hpp"
#include "szeta/verify/verify.hpp"
#include "szeta/zeros/zeros.hpp"

using namespace szeta;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "superzeta");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("szeta_cli_" + name)).string();
}

}  // namespace

TEST_CASE("table prints exact rows as fractions") {
  auto r = run({"table", "--kind", "A", "--t", "1/2", "--smin", "-4", "--smax", "4"});
  REQUIRE(r.code == cli::ok);
  CHECK(r.out.rfind("family,quantity,s,t,value,exact,method,error\n", 0) == 0);
  CHECK(r.out.find("\nA,value,0,1/2,2,true,table_closed_form,0\n") != std::string::npos);
  CHECK(r.out.find("\nA,value,-1,1/2,11/12,true,table_closed_form,0\n") != std::string::npos);
}

TEST_CASE("lambda in JSON") {
  auto r = run({"--format", "json", "lambda", "--variant", "central", "--n-max", "2", "--method", "binomial"});
  REQUIRE(r.code == cli::ok);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == "superzeta/1");
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["value"].get<std::string>().rfind("0.02310499", 0) == 0);
  CHECK(doc["rows"][1]["value"].get<std::string>().rfind("0.09238279", 0) == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args = {"lambda", "--variant", "classic", "--n-max", "12", "--method", "compose"};
  auto a = run(args), b = run(args);
  CHECK(a.code == cli::ok);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"bogus"}).code == cli::usage_error);
  CHECK(run({"table", "--kind", "Q"}).code == cli::usage_error);
  CHECK(run({"--prec", "32", "table"}).code == cli::usage_error);
  CHECK(run({"verify", "--suite", "everything"}).code == cli::usage_error);
  auto r = run({"zeros", "--check", "/nonexistent/zeros.txt"});
  CHECK(r.code == cli::usage_error);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("precision selection") {
  cli::RunConfig cfg;
  cfg.prec_bits = 256;
  auto c = cli::context_for(cfg);
  CHECK(c.bits == 256);
  CHECK(c.target_digits == 30);
  cfg.prec_bits = 128;
  CHECK(cli::context_for(cfg).target_digits == 26);
  cfg.prec_bits.reset();
  ::setenv("SUPERZETA_PREC_BITS", "320", 1);
  CHECK(cli::context_for(cfg).bits == 320);
  ::unsetenv("SUPERZETA_PREC_BITS");
  CHECK(cli::context_for(cfg).bits == 192);
}

TEST_CASE("verify suite through the command line") {
  auto r = run({"verify", "--suite", "tables"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.rfind("suite,check,pass,detail\n", 0) == 0);
  CHECK(r.out.find(",false,") == std::string::npos);
}

TEST_CASE("zero files: write, check, and the criterion on a planted set") {
  std::string zpath = temp_path("z.txt");
  auto f = run({"zeros", "--find", "8", "--out", zpath});
  REQUIRE(f.code == cli::ok);
  auto c = run({"zeros", "--check", zpath});
  CHECK(c.code == cli::ok);

  // an ordinate nudged off its zero fails the sign-change check
  {
    std::ifstream in(zpath);
    std::stringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    auto pos = text.find("14.1347");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 7, "14.2000");
    std::ofstream out(zpath);
    out << text;
  }
  CHECK(run({"zeros", "--check", zpath}).code == cli::verification_failed);
  std::filesystem::remove(zpath);

  std::string tpath = temp_path("toy.json");
  zeros::save_zeros(tpath, verify::toy_set(), zeros::Format::zeroset_json);
  std::string report = temp_path("report.json");
  auto k = run({"criterion", "--zeros", tpath, "--variant", "classic", "--n-max", "400", "--n-min", "1", "--report",
                report});
  CHECK(k.code == cli::ok);
  std::ifstream in(report);
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["schema"] == "superzeta/1");
  CHECK(doc["route"] == "direct");
  CHECK(doc["classification"] == "violation-signature");
  std::filesystem::remove(tpath);
  std::filesystem::remove(report);
}
