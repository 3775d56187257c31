#include "hsc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hsc/bounds.hpp"
#include "hsc/convexity.hpp"
#include "hsc/errors.hpp"
#include "hsc/functions.hpp"
#include "hsc/report.hpp"
#include "hsc/selftest.hpp"
#include "hsc/verify.hpp"

namespace hsc::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string fn_id = "id";
  std::string theorem;
  std::string mode = "harmonic";
  int kind = 0;
  double a = 1.0;
  double b = 2.0;
  double x = 1.5;
  double s = 1.0;
  double q = 1.0;
  double p = 2.0;
  double M = 0.0;
  double theta = 1.0;
  double vartheta = 1.0;
  double rho = 0.0;
  double lambda_s = 0.0;
  std::size_t grid_n = 9;
  double tol = verify::kOracleTol;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool check = false;
  bool printed_kind2 = false;

  // Which optional flags were given.
  bool has_q = false;
  bool has_p = false;
  bool has_M = false;
  bool has_seed = false;
};

// Handles for flags whose presence (not just value) matters.
struct Flags {
  CLI::Option* q = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* M = nullptr;
  CLI::Option* seed = nullptr;
};

void add_output(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_path, "Write the result to this file");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol", cfg.tol, "Quadrature tolerance")
      ->check(CLI::PositiveNumber);
}

void add_interval(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--fn", cfg.fn_id,
                  "Function id: const:<c>, id, pow:<r>, inv, neg");
  cmd->add_option("--a", cfg.a, "Left endpoint");
  cmd->add_option("--b", cfg.b, "Right endpoint");
  cmd->add_option("--s", cfg.s, "Convexity exponent s in (0, 1]");
}

Flags add_exponents(CLI::App* cmd, RunConfig& cfg) {
  Flags f;
  f.q = cmd->add_option("--q", cfg.q, "Power exponent q");
  f.p = cmd->add_option("--p", cfg.p, "Hoelder conjugate p");
  f.M = cmd->add_option("--M", cfg.M, "Derivative bound (corollary mode)");
  return f;
}

void capture(const Flags& f, RunConfig& cfg) {
  cfg.has_q = f.q && f.q->count() > 0;
  cfg.has_p = f.p && f.p->count() > 0;
  cfg.has_M = f.M && f.M->count() > 0;
  cfg.has_seed = f.seed && f.seed->count() > 0;
}

bounds::Exponents exponents_for(bounds::Theorem th, const RunConfig& cfg) {
  if (th == bounds::Theorem::holder || th == bounds::Theorem::holder_kernel) {
    const double q = cfg.has_q ? cfg.q : 2.0;
    if (cfg.has_p) return bounds::ConjugatePair(cfg.p, q);
    return bounds::ConjugatePair::from_q(q);
  }
  if (cfg.has_p) {
    throw UsageError(std::string(bounds::to_id(th)) + " does not take --p");
  }
  return bounds::PowerParam(cfg.q);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.out_path);
  file << text;
}

std::string num(double v) { return report::format_double(v); }

int cmd_lambda(const RunConfig& cfg, std::ostream& out) {
  double value = 0.0;
  double quad = 0.0;
  json doc;
  if (cfg.kind == 5) {
    value = bounds::lambda5(cfg.theta, cfg.x);
    doc = {{"kind", 5}, {"theta", cfg.theta}, {"x", cfg.x}};
    if (cfg.check) quad = verify::lambda5_by_quadrature(cfg.theta, cfg.x, cfg.tol);
  } else if (cfg.kind >= 1 && cfg.kind <= 4) {
    const bounds::LambdaArgs args{cfg.kind,     cfg.theta,    cfg.x,
                                  cfg.lambda_s, cfg.vartheta, cfg.rho};
    value = bounds::lambda(args);
    doc = report::to_json(args);
    if (cfg.check) quad = verify::lambda_by_quadrature(args, cfg.tol);
  } else {
    throw UsageError("--kind must be 1..5");
  }
  doc["value"] = value;
  const double disc = std::abs(value - quad) / std::abs(value);
  if (cfg.check) {
    doc["quadrature"] = quad;
    doc["discrepancy"] = disc;
  }

  if (cfg.format == "csv") {
    std::string header = "kind,theta,x,s,vartheta,rho,value";
    std::ostringstream row;
    row << cfg.kind << ',' << num(cfg.theta) << ',' << num(cfg.x) << ',';
    if (cfg.kind != 5) {
      row << num(cfg.lambda_s) << ',' << num(cfg.vartheta) << ',' << num(cfg.rho);
    } else {
      row << ",,";
    }
    row << ',' << num(value);
    if (cfg.check) {
      header += ",quadrature,discrepancy";
      row << ',' << num(quad) << ',' << num(disc);
    }
    emit(cfg, header + "\n" + row.str() + "\n", out);
  } else {
    emit(cfg, report::dump(doc), out);
  }
  return kExitOk;
}

int cmd_hh(const RunConfig& cfg, std::ostream& out) {
  const auto f = numeric::make_function(cfg.fn_id);
  const convexity::SExponent s(cfg.s);
  bounds::HHTriple tri{};
  std::string label;
  if (cfg.mode == "harmonic") {
    tri = bounds::hh_harmonic_bounds(f, numeric::Interval(cfg.a, cfg.b), s,
                                     cfg.tol);
    label = "T2_2";
  } else {
    if (!(cfg.a >= 0.0) || !(cfg.a < cfg.b)) {
      throw DomainError("hh: need 0 <= a < b");
    }
    tri = bounds::hh_s_convex_bounds(f, cfg.a, cfg.b, s, cfg.tol);
    label = "s_convex";
  }

  if (cfg.format == "csv") {
    auto row = [&](const char* part, double lhs, double rhs) {
      bounds::BoundResult r;
      r.theorem = label + ":" + part;
      r.x = cfg.mode == "harmonic" ? 2.0 * cfg.a * cfg.b / (cfg.a + cfg.b)
                                   : 0.5 * (cfg.a + cfg.b);
      r.a = cfg.a;
      r.b = cfg.b;
      r.s = cfg.s;
      r.lhs = lhs;
      r.rhs = rhs;
      r.slack = rhs - lhs;
      return report::csv_row(r);
    };
    emit(cfg,
         report::csv_header() + row("left", tri.left, tri.middle) +
             row("right", tri.middle, tri.right),
         out);
  } else {
    const json doc = {{"mode", cfg.mode},
                      {"fn", cfg.fn_id},
                      {"a", cfg.a},
                      {"b", cfg.b},
                      {"s", cfg.s},
                      {"left", tri.left},
                      {"middle", tri.middle},
                      {"right", tri.right},
                      {"slack_left", tri.middle - tri.left},
                      {"slack_right", tri.right - tri.middle}};
    emit(cfg, report::dump(doc), out);
  }
  return kExitOk;
}

int cmd_ostrowski(const RunConfig& cfg, std::ostream& out) {
  const auto f = numeric::make_function(cfg.fn_id);
  const numeric::Interval iv(cfg.a, cfg.b);
  bounds::BoundResult r;

  if (cfg.theorem == "classic") {
    if (!cfg.has_M) throw UsageError("classic bound needs --M");
    const bounds::DerivBound M(cfg.M);
    r.theorem = "classic";
    r.x = cfg.x;
    r.a = cfg.a;
    r.b = cfg.b;
    r.M = cfg.M;
    r.lhs = std::abs(f(cfg.x) - numeric::arithmetic_mean(f, cfg.a, cfg.b, cfg.tol));
    r.rhs = bounds::classic_ostrowski_rhs(cfg.x, cfg.a, cfg.b, M);
    r.slack = r.rhs - r.lhs;
    for (double u : iv.grid(32)) {
      if (std::abs(numeric::derivative(f, u)) > cfg.M) r.hypothesis_ok = false;
    }
  } else {
    const auto th = bounds::parse_theorem(cfg.theorem);
    if (!bounds::is_ostrowski(th)) {
      throw UsageError("use the hh command for T2_2");
    }
    const convexity::SExponent s(cfg.s);
    const auto exps = exponents_for(th, cfg);
    std::optional<bounds::DerivBound> M;
    if (cfg.has_M) M = bounds::DerivBound(cfg.M);
    r = bounds::ostrowski_instance(th, f, cfg.x, iv, s, exps, M, cfg.tol);

    verify::VerifyRequest req;
    req.theorem = th;
    req.f = f;
    req.iv = iv;
    req.s = s;
    req.exponents = exps;
    req.M = M;
    req.x_grid = 1;
    r.hypothesis_ok = verify::verify_theorem(req).hypothesis_ok;
  }

  if (cfg.format == "csv") {
    emit(cfg, report::csv_header() + report::csv_row(r), out);
  } else {
    emit(cfg, report::dump(report::to_json(r)), out);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  verify::VerifyRequest req;
  req.theorem = bounds::parse_theorem(cfg.theorem);
  req.f = numeric::make_function(cfg.fn_id);
  req.iv = numeric::Interval(cfg.a, cfg.b);
  req.s = convexity::SExponent(cfg.s);
  if (bounds::is_ostrowski(req.theorem)) {
    req.exponents = exponents_for(req.theorem, cfg);
  }
  if (cfg.has_M) req.M = bounds::DerivBound(cfg.M);
  req.x_grid = cfg.grid_n;
  req.tol = cfg.tol;
  if (cfg.has_seed) {
    req.gate_grid.random_samples = 256;
    req.gate_grid.seed = cfg.seed;
  }

  const auto rep = verify::verify_theorem(req);
  if (cfg.format == "csv") {
    std::string text = report::csv_header();
    for (const auto& r : rep.results) text += report::csv_row(r);
    emit(cfg, text, out);
  } else {
    emit(cfg, report::dump(report::to_json(rep)), out);
  }
  return rep.pass ? kExitOk : kExitFailed;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  verify::SelftestOptions opts;
  opts.tol = cfg.tol;
  opts.printed_kind2 = cfg.printed_kind2;
  const auto rows = verify::run_selftest(opts);

  bool all = true;
  for (const auto& r : rows) all = all && r.pass;

  if (cfg.format == "csv") {
    std::string text = "suite,pass,metric,threshold,cases,detail\n";
    for (const auto& r : rows) {
      text += "\"" + r.name + "\"," + (r.pass ? "true" : "false") + "," +
              num(r.metric) + "," + num(r.threshold) + "," +
              std::to_string(r.cases) + ",\"" + r.detail + "\"\n";
    }
    emit(cfg, text, out);
  } else if (cfg.format == "json") {
    json suites = json::array();
    for (const auto& r : rows) {
      suites.push_back({{"suite", r.name},
                        {"pass", r.pass},
                        {"metric", r.metric},
                        {"threshold", r.threshold},
                        {"cases", r.cases},
                        {"detail", r.detail}});
    }
    emit(cfg, report::dump({{"suites", suites}, {"pass", all}}), out);
  } else {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-30s %-6s %-25s %-25s %6s  %s\n",
                  "suite", "result", "metric", "threshold", "cases", "detail");
    os << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%-30s %-6s %-25s %-25s %6zu  ",
                    r.name.c_str(), r.pass ? "pass" : "FAIL",
                    num(r.metric).c_str(), num(r.threshold).c_str(), r.cases);
      os << line << r.detail << "\n";
    }
    os << (all ? "selftest: pass\n" : "selftest: FAIL\n");
    emit(cfg, os.str(), out);
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hermite-Hadamard and Ostrowski-type bounds for harmonically "
               "s-convex functions",
               "hsconvex"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* lam = app.add_subcommand("lambda", "Evaluate a coefficient lambda_k");
  lam->add_option("--kind", cfg.kind, "1..5")->required();
  lam->add_option("--theta", cfg.theta, "Endpoint argument (a or b)");
  lam->add_option("--x", cfg.x, "Anchor point");
  lam->add_option("--s", cfg.lambda_s, "Exponent s >= 0");
  lam->add_option("--vartheta", cfg.vartheta, "Denominator exponent / 2");
  lam->add_option("--rho", cfg.rho, "Power of t");
  lam->add_flag("--check", cfg.check,
                "Also integrate the definition and report the discrepancy");
  add_output(lam, cfg);

  auto* hh = app.add_subcommand("hh", "Hermite-Hadamard triple");
  add_interval(hh, cfg);
  hh->add_option("--mode", cfg.mode, "harmonic or s-convex")
      ->check(CLI::IsMember({"harmonic", "s-convex"}));
  add_output(hh, cfg);

  auto* ost = app.add_subcommand("ostrowski", "One Ostrowski-type bound");
  ost->add_option("--theorem", cfg.theorem, "T2_3..T2_7 or classic")
      ->required();
  add_interval(ost, cfg);
  ost->add_option("--x", cfg.x, "Anchor point in [a, b]");
  const Flags ost_flags = add_exponents(ost, cfg);
  add_output(ost, cfg);

  auto* ver = app.add_subcommand("verify", "Hypothesis-gated bound sweep");
  ver->add_option("--theorem", cfg.theorem, "T2_2..T2_7")->required();
  add_interval(ver, cfg);
  Flags ver_flags = add_exponents(ver, cfg);
  ver->add_option("--grid", cfg.grid_n, "Anchor points on [a, b]");
  ver_flags.seed =
      ver->add_option("--seed", cfg.seed, "Add 256 seeded random gate samples");
  add_output(ver, cfg);

  auto* self = app.add_subcommand("selftest", "Run the full verification battery");
  add_output(self, cfg);
  cfg.format = "";
  self->add_flag("--inject-printed-kind2", cfg.printed_kind2)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*lam) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_lambda(cfg, out);
    }
    if (*hh) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_hh(cfg, out);
    }
    if (*ost) {
      capture(ost_flags, cfg);
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_ostrowski(cfg, out);
    }
    if (*ver) {
      capture(ver_flags, cfg);
      if (cfg.format.empty()) cfg.format = "json";
      if (cfg.grid_n == 0) throw UsageError("--grid must be positive");
      return cmd_verify(cfg, out);
    }
    return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << " (partial " << e.partial()
        << ", error estimate " << e.err_est() << ")\n";
    return kExitFailed;
  }
}

}  // namespace hsc::cli
