#include "sphconv/cli.hpp"

#include "sphconv/generators.hpp"
#include "sphconv/io.hpp"
#include "sphconv/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace sphconv {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CheckArgs {
  std::string path;
  long long samples = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool exhaustive = false;
  std::string report;
  std::vector<std::string> only;
};

struct FalsifyArgs {
  std::string path;
  long long budget = 100000;
  std::uint64_t seed = 0;
};

struct GenerateArgs {
  std::string family;
  long long n = 4;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out = ".";
  bool nonconvex = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const InstanceFile file = load_instance(args.path);
  VerificationReport report;
  report.seed = args.seed;
  report.exhaustive = args.exhaustive;

  BatteryConfig battery;
  battery.exhaustive = args.exhaustive;
  battery.only = args.only;
  auto start = Clock::now();
  report.battery = run_battery(file.instance, file.cone, battery);
  report.battery_seconds = seconds_since(start);

  OracleConfig oracle;
  oracle.seed = args.seed;
  oracle.pair_budget = args.samples;
  oracle.tol = args.tol;
  start = Clock::now();
  report.oracle = falsify(file.instance, file.cone, oracle);
  report.oracle_seconds = seconds_since(start);

  aggregate(report, file.instance, file.cone);
  const json doc = report_to_json(report, file.instance, file.cone);
  if (args.report.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    std::ofstream f(args.report);
    if (!f) throw InputError("cannot write report: " + args.report);
    f << doc.dump(2) << '\n';
    out << to_string(report.verdict);
    if (!report.battery.decided_by.empty()) out << " (" << report.battery.decided_by << ")";
    out << '\n';
  }
  return exit_code(report.verdict);
}

int cmd_falsify(const FalsifyArgs& args, std::ostream& out) {
  const InstanceFile file = load_instance(args.path);
  OracleConfig oracle;
  oracle.seed = args.seed;
  oracle.pair_budget = args.budget;
  const OracleVerdict v = falsify(file.instance, file.cone, oracle);
  out << oracle_to_json(v).dump(2) << '\n';
  if (v.status != OracleStatus::FalsifiedNonConvex) return 2;
  if (!v.witness || !revalidate(file.instance, file.cone, *v.witness, -kWitnessTol)) {
    return kExitInternal;
  }
  return 1;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  if (args.n < 3) throw InputError("--n must be at least 3");
  if (args.count < 1) throw InputError("--count must be positive");
  std::string family = args.family;
  if (args.nonconvex) {
    if (family != "diag-iff") throw InputError("--nonconvex applies only to --family diag-iff");
    family = "diag-iff-nonconvex";
  }
  std::filesystem::create_directories(args.out);
  for (int k = 0; k < args.count; ++k) {
    Rng rng(child_seed(args.seed, static_cast<std::uint64_t>(k)));
    const GeneratedInstance g = generate(family, static_cast<Index>(args.n), rng);
    json meta = {{"family", g.family},
                 {"target_certificate", g.target_certificate},
                 {"label", g.label},
                 {"seed", args.seed},
                 {"index", k}};
    const std::filesystem::path path =
        std::filesystem::path(args.out) /
        (family + "-n" + std::to_string(args.n) + "-s" + std::to_string(args.seed) + "-" +
         std::to_string(k) + ".json");
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path.string());
    f << instance_to_json(g.instance, Cone::orthant(g.instance.dim()), meta).dump(2) << '\n';
    out << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical convexity of quadratic functions on cones"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run the certificate battery and the oracle");
  c->add_option("instance", check.path, "Instance JSON file")->required();
  c->add_option("--samples", check.samples, "Random pairs drawn by the oracle")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--seed", check.seed, "Seed for every randomized step");
  c->add_option("--tol", check.tol, "Relative oracle tolerance")->check(CLI::PositiveNumber);
  c->add_flag("--exhaustive", check.exhaustive, "Run every certificate");
  c->add_option("--report", check.report, "Write the JSON report here");
  c->add_option("--only", check.only, "Run only the named certificates");

  FalsifyArgs fals;
  auto* f = app.add_subcommand("falsify", "Search for a witness pair");
  f->add_option("instance", fals.path, "Instance JSON file")->required();
  f->add_option("--budget", fals.budget, "Random pairs (0 = structured pairs only)")
      ->check(CLI::NonNegativeNumber);
  f->add_option("--seed", fals.seed, "Seed");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write generated instances");
  g->add_option("--family", gen.family, "gap, diag-iff, bipos, cd or random")->required();
  g->add_option("--n", gen.n, "Dimension (at least 3)");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--count", gen.count, "Number of instances");
  g->add_option("--out", gen.out, "Output directory");
  g->add_flag("--nonconvex", gen.nonconvex, "diag-iff instances that violate the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (f->parsed()) return cmd_falsify(fals, out);
    return cmd_generate(gen, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace sphconv
