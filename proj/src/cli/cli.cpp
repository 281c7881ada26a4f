#include "szeta/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "szeta/errors.hpp"
#include "szeta/keiper_li/keiper_li.hpp"
#include "szeta/mp/rational.hpp"
#include "szeta/superzeta/superzeta.hpp"
#include "szeta/verify/verify.hpp"
#include "szeta/zeros/zeros.hpp"

namespace szeta::cli {

namespace {

using json = nlohmann::ordered_json;
using mp::PrecisionContext;
using mp::PrecisionScope;
using mp::Real;
namespace kl = keiper_li;
namespace sz = superzeta;

constexpr const char* kSchema = "superzeta/1";

// RFC 4180 quoting, only when needed
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Csv {
 public:
  explicit Csv(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << field(cells[i]);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

std::string num(const Real& x, int digits) { return mp::to_string(x, digits); }

zeros::ZeroSet load_source(const std::string& source, const PrecisionContext& ctx) {
  if (source.rfind("find:", 0) == 0) {
    long k = 0;
    try {
      k = std::stol(source.substr(5));
    } catch (const std::exception&) {
      throw DomainError("bad zero source '" + source + "'");
    }
    if (k < 1) throw DomainError("find:K needs K >= 1");
    return zeros::find_zeros(k, ctx);
  }
  return zeros::load_zeros(source, zeros::format_for_path(source));
}

bool off_line_or_synthetic(const zeros::ZeroSet& set) {
  if (set.synthetic) return true;
  return std::any_of(set.entries.begin(), set.entries.end(), [](const auto& e) { return !e.on_line(); });
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  std::string kind = "A";
  std::string t = "0";
  long smin = -4, smax = 4;
  int digits = 30;
};

sz::Family parse_family(const std::string& k) {
  if (k == "A") return sz::Family::ZA;
  if (k == "B") return sz::Family::ZB;
  if (k == "C") return sz::Family::ZC;
  if (k == "S") return sz::Family::ZS;
  if (k == "hurwitz") return sz::Family::hurwitz;
  throw DomainError("unknown kind '" + k + "'");
}

int cmd_table(const TableArgs& a, const RunConfig& cfg, std::ostream& out) {
  PrecisionContext ctx = context_for(cfg);
  sz::Family family = parse_family(a.kind);
  mp::Rational t = mp::parse_rational(a.t);
  std::optional<zeros::ZeroSet> set;
  if (!cfg.zeros_source.empty()) set = load_source(cfg.zeros_source, ctx);
  auto rows = sz::table_column(family, t, a.smin, a.smax, ctx, set ? &*set : nullptr);
  PrecisionScope scope(ctx.bits);
  if (cfg.output_format == OutputFormat::csv) {
    Csv csv(out);
    csv.row({"family", "quantity", "s", "t", "value", "exact", "method", "error"});
    for (const auto& r : rows)
      csv.row({sz::to_string(r.family), sz::to_string(r.quantity), std::to_string(r.argument), r.shift_string(a.digits),
               r.payload_string(a.digits), r.exact() ? "true" : "false", sz::to_string(r.method),
               r.exact() ? "0" : num(r.error, 3)});
    return ok;
  }
  json j;
  j["schema"] = kSchema;
  j["command"] = "table";
  j["kind"] = a.kind;
  j["t"] = mp::to_string(t);
  j["digits"] = a.digits;
  j["rows"] = json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"family", sz::to_string(r.family)},
                         {"quantity", sz::to_string(r.quantity)},
                         {"s", r.argument},
                         {"value", r.payload_string(a.digits)},
                         {"exact", r.exact()},
                         {"method", sz::to_string(r.method)},
                         {"error", r.exact() ? "0" : num(r.error, 3)}});
  out << j.dump(2) << '\n';
  return ok;
}

// --- lambda ----------------------------------------------------------------

struct LambdaArgs {
  std::string variant = "classic";
  long n_max = 20;
  std::string method = "binomial";
  int digits = 30;
};

// contour integrals are slow; "all" runs them for the first few n only
constexpr long kContourAllMax = 4;

int cmd_lambda(const LambdaArgs& a, const RunConfig& cfg, std::ostream& out) {
  PrecisionContext ctx = context_for(cfg);
  kl::Variant v = kl::parse_variant(a.variant);
  const std::string& m = a.method;
  if (m != "binomial" && m != "compose" && m != "direct" && m != "contour" && m != "all")
    throw DomainError("unknown method '" + m + "'");
  if (a.n_max < 1) throw DomainError("--n-max must be at least 1");
  bool want_zeros = m == "direct" || m == "contour" || m == "all";
  std::optional<zeros::ZeroSet> set;
  if (want_zeros) {
    if (cfg.zeros_source.empty()) throw DomainError("method '" + m + "' needs --zeros");
    set = load_source(cfg.zeros_source, ctx);
  }
  bool tail = set && set->complete_below > 0;
  long n = a.n_max;
  std::optional<kl::LambdaSeries> bin, comp, dir;
  std::vector<std::optional<mp::Estimate<Real>>> cont(static_cast<size_t>(n) + 1);
  if (m == "binomial" || m == "all") bin = kl::lambda_binomial(v, n, ctx);
  if (m == "compose" || m == "all") comp = kl::lambda_composition(v, n, ctx);
  if (m == "direct" || m == "all") dir = kl::lambda_direct_series(v, n, *set, ctx, tail);
  if (m == "contour" || m == "all") {
    long top = m == "all" ? std::min(n, kContourAllMax) : n;
    for (long k = 1; k <= top; ++k) cont[k] = kl::lambda_contour(v, k, *set, ctx);
  }
  const kl::LambdaSeries* primary = bin ? &*bin : comp ? &*comp : dir ? &*dir : nullptr;
  std::string method_name = primary ? kl::to_string(primary->method) : kl::to_string(kl::LambdaMethod::contour);
  mp::Bits bits = ctx.bits;
  if (primary) bits = std::max(bits, primary->precision_used.back());
  PrecisionScope scope(bits);

  struct Row {
    long n;
    std::string value, error, canc, d_comp, d_dir, d_cont;
  };
  std::vector<Row> rows;
  for (long k = 1; k <= n; ++k) {
    Row r{k, "", "", "", "", "", ""};
    Real ref;
    if (primary) {
      ref = primary->at(k);
      r.value = num(ref, a.digits);
      r.error = num(primary->error_at(k), 3);
      std::ostringstream c;
      c.precision(4);
      c << std::fixed << primary->cancellation_digits[static_cast<size_t>(k - 1)];
      r.canc = c.str();
    } else {
      ref = cont[k]->value;
      r.value = num(ref, a.digits);
      r.error = num(cont[k]->error, 3);
    }
    if (m == "all") {
      r.d_comp = num(comp->at(k) - ref, 3);
      r.d_dir = num(dir->at(k) - ref, 3);
      if (cont[k]) r.d_cont = num(cont[k]->value - ref, 3);
    }
    rows.push_back(r);
  }
  if (cfg.output_format == OutputFormat::csv) {
    Csv csv(out);
    csv.row({"n", "variant", "method", "value", "error", "cancellation_digits", "delta_compose", "delta_direct",
             "delta_contour"});
    for (const auto& r : rows)
      csv.row({std::to_string(r.n), kl::to_string(v), method_name, r.value, r.error, r.canc, r.d_comp, r.d_dir,
               r.d_cont});
    return ok;
  }
  json j;
  j["schema"] = kSchema;
  j["command"] = "lambda";
  j["variant"] = kl::to_string(v);
  j["method"] = method_name;
  j["n_max"] = n;
  j["rows"] = json::array();
  for (const auto& r : rows) {
    json e = {{"n", r.n}, {"value", r.value}, {"error", r.error}, {"cancellation_digits", r.canc}};
    if (m == "all") {
      e["delta_compose"] = r.d_comp;
      e["delta_direct"] = r.d_dir;
      e["delta_contour"] = r.d_cont;
    }
    j["rows"].push_back(e);
  }
  out << j.dump(2) << '\n';
  return ok;
}

// --- zeros -----------------------------------------------------------------

struct ZerosArgs {
  long find = 0;
  std::string out_path;
  std::string check_path;
};

int cmd_zeros_find(const ZerosArgs& a, const RunConfig& cfg, std::ostream& out) {
  PrecisionContext ctx = context_for(cfg);
  if (a.out_path.empty()) throw DomainError("--find needs --out");
  auto set = zeros::find_zeros(a.find, ctx);
  zeros::save_zeros(a.out_path, set, zeros::format_for_path(a.out_path));
  PrecisionScope scope(ctx.bits);
  std::string first = num(set.entries.front().gamma, 20), last = num(set.entries.back().gamma, 20),
              cert = num(set.complete_below, 20);
  if (cfg.output_format == OutputFormat::csv) {
    Csv csv(out);
    csv.row({"count", "first", "last", "complete_below", "path"});
    csv.row({std::to_string(set.size()), first, last, cert, a.out_path});
    return ok;
  }
  json j = {{"schema", kSchema}, {"command", "zeros"}, {"count", set.size()}, {"first", first},
            {"last", last},      {"complete_below", cert}, {"path", a.out_path}};
  out << j.dump(2) << '\n';
  return ok;
}

struct Finding {
  std::string check;
  bool pass;
  std::string detail;
};

int cmd_zeros_check(const ZerosArgs& a, const RunConfig& cfg, std::ostream& out) {
  PrecisionContext ctx = context_for(cfg);
  auto set = zeros::load_zeros(a.check_path, zeros::format_for_path(a.check_path));
  PrecisionScope scope(ctx.bits);
  std::vector<Finding> f;
  bool sorted = std::is_sorted(set.entries.begin(), set.entries.end(),
                               [](const auto& x, const auto& y) { return x.gamma < y.gamma; });
  f.push_back({"entries sorted by ordinate", sorted, std::to_string(set.size()) + " entries"});
  if (!off_line_or_synthetic(set)) {
    // each on-line ordinate must bracket a sign change of Hardy's Z
    long bad = 0;
    std::string first_bad;
    for (const auto& e : set.entries) {
      double g = mp::to_double(e.gamma);
      if (g < 10) continue;
      double d = 1e-6 * std::max(1.0, g / 100);
      if (zeros::hardy_z_double(g - d) * zeros::hardy_z_double(g + d) > 0) {
        if (bad++ == 0) first_bad = num(e.gamma, 15);
      }
    }
    f.push_back({"ordinates are sign changes of Hardy's Z", bad == 0,
                 bad == 0 ? "all" : std::to_string(bad) + " failures, first at " + first_bad});
  }
  // counting check on the certified part of [50, 500]
  Real hi = mp::min(Real(500L), set.complete_below);
  if (hi > 50L) {
    Real worst;
    long below = 0;
    std::string where;
    auto probe = [&](const Real& T, long N) {
      Real gap = mp::abs(Real(N) - zeros::counting_estimate(T, set.model));
      if (gap > worst) {
        worst = gap;
        where = num(T, 12);
      }
    };
    probe(Real(50L), zeros::count_below(set, Real(50L)));
    probe(hi, zeros::count_below(set, hi));
    for (const auto& e : set.entries) {
      long w = e.multiplicity * (e.on_line() ? 1 : 2);
      if (e.gamma >= 50L && e.gamma <= hi) {
        probe(e.gamma, below);
        probe(e.gamma, below + w);
      }
      below += w;
    }
    f.push_back({"|N(T) - counting estimate| <= 2 on [50, " + num(hi, 6) + "]", worst <= 2L,
                 "sup gap " + num(worst, 4) + " at T = " + where});
  } else {
    f.push_back({"counting check", true, "skipped: certified only below " + num(set.complete_below, 6)});
  }
  bool all = std::all_of(f.begin(), f.end(), [](const Finding& x) { return x.pass; });
  if (cfg.output_format == OutputFormat::csv) {
    Csv csv(out);
    csv.row({"check", "pass", "detail"});
    for (const auto& x : f) csv.row({x.check, x.pass ? "true" : "false", x.detail});
  } else {
    json j = {{"schema", kSchema}, {"command", "zeros"}, {"path", a.check_path}, {"pass", all}};
    j["checks"] = json::array();
    for (const auto& x : f) j["checks"].push_back({{"check", x.check}, {"pass", x.pass}, {"detail", x.detail}});
    out << j.dump(2) << '\n';
  }
  return all ? ok : verification_failed;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  long n_max = 300;
};

constexpr const char* kDefaultZeros = "find:2000";

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PrecisionContext ctx = context_for(cfg);
  verify::Suite suite = verify::parse_suite(a.suite);
  std::optional<zeros::ZeroSet> set;
  verify::SuiteOptions o;
  o.ctx = ctx;
  o.n_max = a.n_max;
  if (verify::needs_zeros(suite)) {
    set = load_source(cfg.zeros_source.empty() ? kDefaultZeros : cfg.zeros_source, ctx);
    o.zeros = &*set;
  }
  auto results = verify::run_suite(suite, o);
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (cfg.output_format == OutputFormat::csv) {
    Csv csv(out);
    csv.row({"suite", "check", "pass", "detail"});
    for (const auto& r : results) csv.row({a.suite, r.name, r.pass ? "true" : "false", r.detail});
  } else {
    json j = {{"schema", kSchema}, {"command", "verify"}, {"suite", a.suite}, {"pass", all}};
    j["checks"] = json::array();
    for (const auto& r : results) j["checks"].push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << j.dump(2) << '\n';
  }
  for (const auto& r : results)
    if (!r.pass) err << "violated: " << r.name << " (" << r.detail << ")\n";
  return all ? ok : verification_failed;
}

// --- criterion -------------------------------------------------------------

struct CriterionArgs {
  std::string variant = "classic";
  long n_max = 256;
  long n_min = 0;
  std::string route = "auto";
  std::string report_path;
};

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

int cmd_criterion(const CriterionArgs& a, const RunConfig& cfg, std::ostream& out) {
  PrecisionContext ctx = context_for(cfg);
  if (cfg.zeros_source.empty()) throw DomainError("criterion needs --zeros");
  if (a.n_max < 16) throw DomainError("--n-max must be at least 16");
  kl::Variant v = kl::parse_variant(a.variant);
  auto set = load_source(cfg.zeros_source, ctx);
  std::string route = a.route;
  if (route == "auto") route = off_line_or_synthetic(set) ? "direct" : "compose";
  kl::LambdaSeries series;
  if (route == "direct") {
    PrecisionContext c = ctx;
    series = kl::lambda_direct_series(v, a.n_max, set, c, !set.synthetic && set.complete_below > 0);
  } else if (route == "compose") {
    series = kl::lambda_composition(v, a.n_max, ctx);
  } else {
    throw DomainError("unknown route '" + route + "'");
  }
  long n_lo = a.n_min > 0 ? a.n_min : std::max(1L, a.n_max / 4);
  if (n_lo >= a.n_max) throw DomainError("--n-min must be below --n-max");
  auto model = set.model;
  auto rep = kl::criterion_report(series, n_lo, a.n_max, model, off_line_or_synthetic(set) ? &set : nullptr);

  mp::Bits bits = std::max(ctx.bits, series.precision_used.back());
  PrecisionScope scope(bits);
  json j;
  j["schema"] = kSchema;
  j["command"] = "criterion";
  j["variant"] = kl::to_string(v);
  j["route"] = route;
  j["zeros"] = cfg.zeros_source;
  j["n_lo"] = rep.n_lo;
  j["n_hi"] = rep.n_hi;
  j["classification"] = kl::to_string(rep.classification);
  j["fitted_growth_rate"] = optional_number(rep.fitted_growth_rate);
  j["fit_relative_error"] = optional_number(rep.fit_relative_error);
  j["predicted_growth_rate"] = optional_number(rep.predicted_growth_rate);
  j["octave_max"] = rep.octave_max;
  j["note"] = rep.note;
  j["residuals"] = json::array();
  for (size_t i = 0; i < rep.n.size(); ++i) j["residuals"].push_back({{"n", rep.n[i]}, {"residual", num(rep.residuals[i], 12)}});
  if (!a.report_path.empty()) {
    std::ofstream f(a.report_path);
    if (!f) throw DomainError("cannot write " + a.report_path);
    f << j.dump(2) << '\n';
  }
  if (cfg.output_format == OutputFormat::json) {
    out << j.dump(2) << '\n';
    return ok;
  }
  Csv csv(out);
  csv.row({"n", "lambda", "tempered", "residual"});
  for (size_t i = 0; i < rep.n.size(); ++i) {
    long n = rep.n[i];
    csv.row({std::to_string(n), num(series.at(n), 20), num(kl::predict_tempered(n, model), 20),
             num(rep.residuals[i], 12)});
  }
  return ok;
}

}  // namespace

PrecisionContext context_for(const RunConfig& cfg) {
  PrecisionContext ctx;
  ctx.bits = 192;
  ctx.target_digits = 30;
  std::optional<long> bits = cfg.prec_bits;
  if (!bits) {
    if (const char* env = std::getenv("SUPERZETA_PREC_BITS"); env && *env) {
      try {
        bits = std::stol(env);
      } catch (const std::exception&) {
        throw DomainError(std::string("SUPERZETA_PREC_BITS is not an integer: ") + env);
      }
    }
  }
  if (bits) {
    if (*bits < 64) throw DomainError("precision must be at least 64 bits");
    ctx.bits = *bits;
    ctx.max_bits = std::max<mp::Bits>(ctx.max_bits, 4 * ctx.bits);
    long digits = static_cast<long>(std::floor(static_cast<double>(*bits) * 0.30103)) - 12;
    ctx.target_digits = static_cast<int>(std::clamp(digits, 10L, 30L));
  }
  ctx.validate();
  return ctx;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"superzeta: zeta functions over the Riemann zeros"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string prec = "auto", format = "csv";
  app.add_option("--prec", prec, "working precision in bits, or auto")->capture_default_str();
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out-file", cfg.output_path, "write the output here instead of stdout");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "special values of one family at integer arguments");
  table->add_option("--kind", ta.kind, "A, B, C, S or hurwitz")->required();
  table->add_option("--t", ta.t, "shift, a rational such as 1/2")->required();
  table->add_option("--smin", ta.smin)->required();
  table->add_option("--smax", ta.smax)->required();
  table->add_option("--digits", ta.digits, "significant digits of transcendental rows")->capture_default_str();
  table->add_option("--zeros", cfg.zeros_source, "zero file or find:K (third kind at s >= 2)");

  LambdaArgs la;
  auto* lambda = app.add_subcommand("lambda", "Keiper-Li coefficients");
  lambda->add_option("--variant", la.variant)->check(CLI::IsMember({"classic", "central"}))->capture_default_str();
  lambda->add_option("--n-max", la.n_max)->required();
  lambda->add_option("--method", la.method)
      ->check(CLI::IsMember({"binomial", "compose", "direct", "contour", "all"}))
      ->capture_default_str();
  lambda->add_option("--digits", la.digits)->capture_default_str();
  lambda->add_option("--zeros", cfg.zeros_source, "zero file or find:K");

  ZerosArgs za;
  auto* zcmd = app.add_subcommand("zeros", "find or check zero data");
  auto* find_opt = zcmd->add_option("--find", za.find, "number of zeros to find");
  zcmd->add_option("--out", za.out_path, "output file (.json for the zero-set format)");
  auto* check_opt = zcmd->add_option("--check", za.check_path, "zero file to validate");
  find_opt->excludes(check_opt);
  zcmd->require_option(1, 2);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "invariant suites");
  ver->add_option("--suite", va.suite)
      ->required()
      ->check(CLI::IsMember({"tables", "identities", "continuation", "poles", "lambda"}));
  ver->add_option("--zeros", cfg.zeros_source, "zero file or find:K (default find:2000)");
  ver->add_option("--n-max", va.n_max, "range of the lambda suite")->capture_default_str();

  CriterionArgs ca;
  auto* crit = app.add_subcommand("criterion", "asymptotic criterion experiment");
  crit->add_option("--zeros", cfg.zeros_source, "zero file or find:K")->required();
  crit->add_option("--variant", ca.variant)->check(CLI::IsMember({"classic", "central"}))->capture_default_str();
  crit->add_option("--n-max", ca.n_max)->capture_default_str();
  crit->add_option("--n-min", ca.n_min, "start of the residual window (default n-max/4)");
  crit->add_option("--route", ca.route, "auto, direct or compose")->capture_default_str();
  crit->add_option("--report", ca.report_path, "JSON report file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    if (prec != "auto") {
      try {
        size_t used = 0;
        cfg.prec_bits = std::stol(prec, &used);
        if (used != prec.size()) throw std::invalid_argument(prec);
      } catch (const std::exception&) {
        throw DomainError("--prec must be an integer or auto");
      }
    }
    cfg.output_format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (*table) code = cmd_table(ta, cfg, buffer);
    else if (*lambda) code = cmd_lambda(la, cfg, buffer);
    else if (*zcmd) code = za.check_path.empty() ? cmd_zeros_find(za, cfg, buffer) : cmd_zeros_check(za, cfg, buffer);
    else if (*ver) code = cmd_verify(va, cfg, buffer, err);
    else if (*crit) code = cmd_criterion(ca, cfg, buffer);
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return numeric_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return numeric_failure;
  }
  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.output_path);
    if (!f) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return usage_error;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace szeta::cli
