// hedgelab: evaluate prototype-threshold labels and their hedges from JSON
// specs, emit membership curves, and run the brute-force verification
// suites. Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "labelsem/curve.hpp"
#include "labelsem/json_io.hpp"
#include "labelsem/verify.hpp"

namespace {

using namespace labelsem;

json load_json_arg(const std::string& arg) {
  // "-" reads stdin; a leading '{' or '[' is inline JSON; anything else is a path
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return json::parse(ss.str());
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  return json::parse(in);
}

HedgedLabel build_label(const std::string& label_arg, const std::vector<std::string>& hedge_args) {
  Label base = label_from_json(load_json_arg(label_arg));
  std::vector<HedgeSpec> chain;
  for (const std::string& h : hedge_args) {
    json hj;
    if (!h.empty() && (h.front() == '{' || h.front() == '[')) {
      hj = json::parse(h);
    } else {
      hj = json(h);  // bare alias like "quite"
    }
    for (auto& spec : hedge_chain_from_json(hj)) chain.push_back(std::move(spec));
  }
  return HedgedLabel(std::move(base), std::move(chain));
}

HedgeKind parse_kind(const std::string& s) {
  if (s == "dilate" || s == "quite") return HedgeKind::dilate;
  if (s == "concentrate" || s == "very") return HedgeKind::concentrate;
  throw std::invalid_argument("kind must be dilate or concentrate");
}

int run(int argc, char** argv) {
  CLI::App app{"label-semantics hedge calculus"};
  app.require_subcommand(1);

  std::string label_arg;
  std::vector<std::string> hedge_args;
  std::vector<double> x_coords;
  std::vector<double> range{1.0, 9.0};
  int steps = 161;
  std::string out_path;
  std::string format = "csv";
  std::string scope = "all";
  std::string kind_name = "dilate";
  double m0 = 0.5;
  double tol = 1e-6;
  int n_compose = 2;
  OracleConfig cfg;

  auto* eval = app.add_subcommand("eval", "print appropriateness at a point");
  eval->add_option("--label", label_arg, "label JSON (path, inline, or -)")->required();
  eval->add_option("--hedge", hedge_args, "hedge JSON or alias, ordered, repeatable");
  eval->add_option("--x", x_coords, "point coordinates")->required()->expected(-1);

  auto* curve = app.add_subcommand("curve", "emit a membership curve");
  curve->add_option("--label", label_arg, "label JSON (path, inline, or -)")->required();
  curve->add_option("--hedge", hedge_args, "hedge JSON or alias, ordered, repeatable");
  curve->add_option("--range", range, "sweep range LO HI")->expected(2);
  curve->add_option("--steps", steps, "number of rows")->check(CLI::Range(2, 100'000'000));
  curve->add_option("--out", out_path, "output path (default stdout)");
  curve->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run brute-force verification suites");
  verify_cmd->add_option("--scope", scope,
                         "dilate|concentrate|chain|bosc|novak|power|deterministic|limits|"
                         "properties|all");
  verify_cmd->add_option("--samples", cfg.samples, "Monte-Carlo samples")->check(CLI::Range(std::uint64_t{10'000}, std::uint64_t{1'000'000'000}));
  verify_cmd->add_option("--seed", cfg.seed, "RNG seed");
  verify_cmd->add_flag("!--serial", cfg.parallel, "disable the parallel sampling path");

  auto* limit = app.add_subcommand("limit", "iterate a hedge map to its limit");
  limit->add_option("--kind", kind_name, "dilate|concentrate|quite|very")->required();
  limit->add_option("--m0", m0, "starting appropriateness in [0,1]")->required();
  limit->add_option("--tol", tol, "convergence tolerance")->check(CLI::PositiveNumber);

  auto* compose = app.add_subcommand("compose", "n-fold hedge map application");
  compose->add_option("--kind", kind_name, "dilate|concentrate|quite|very")->required();
  compose->add_option("--m0", m0, "starting appropriateness in [0,1]")->required();
  compose->add_option("--n", n_compose, "number of applications")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the diagnostic
    return code == 0 ? 0 : 1;
  }

  if (eval->parsed()) {
    const HedgedLabel hl = build_label(label_arg, hedge_args);
    std::printf("%.6f\n", hl.appropriateness(Point(x_coords)));
    return 0;
  }

  if (curve->parsed()) {
    const HedgedLabel hl = build_label(label_arg, hedge_args);
    const Curve c = compute_curve(CurveRequest{hl, range[0], range[1], steps});
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::invalid_argument("cannot write " + out_path);
      os = &file;
    }
    if (format == "csv")
      write_csv(c, *os);
    else
      write_json(c, *os);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const auto results = verify::run_scope(scope, cfg);
    bool all_pass = true;
    for (const auto& r : results) {
      std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
      all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
  }

  if (limit->parsed()) {
    const HedgeKind kind = parse_kind(kind_name);
    const auto r = iterate_to_limit(kind, m0, tol);
    std::printf("%g (%d steps)\n", limit_profile(kind, m0), r.steps);
    return 0;
  }

  if (compose->parsed()) {
    std::printf("%.6f\n", compose_n(parse_kind(kind_name), m0, n_compose));
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
