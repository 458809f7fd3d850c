// mre: command-line front end for the two-qubit entanglement toolkit.

#include <mre/errors.hpp>
#include <mre_cli/commands.hpp>
#include <mre_cli/sweep.hpp>
#include <mre_cli/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace mre::cli;

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw mre::InputError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const mre::Json& report, const RunConfig& cfg) {
  Sink sink(cfg.output);
  if (cfg.format == Format::Table) {
    render_table(report, sink.stream());
  } else {
    render_json(report, sink.stream());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Modified relative entropy of entanglement for two-qubit states"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed of every randomized step (default 0)");
  app.add_option("--restarts", cfg.restarts, "Random restarts of the MRE and RE searches")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--m-max", cfg.m_max, "Largest ensemble size searched (default 2 x rank)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tol, "Convergence tolerance of the local optimizer")->check(CLI::PositiveNumber);
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"table", Format::Table}};
  app.add_option("--format", cfg.format, "Report format: json or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", cfg.output, "Write the report or CSV here instead of stdout");

  std::string state_path, kraus_path;

  auto* measure = app.add_subcommand("measure", "Entanglement measures of a state file");
  measure->add_option("state", state_path, "Pure state, density matrix or ensemble (JSON)")->required();

  auto* search = app.add_subcommand("search", "Minimize MRE over pure-state decompositions");
  search->add_option("state", state_path, "State file (JSON)")->required();

  auto* re_bound = app.add_subcommand("re-bound", "Check RE estimate <= MRE <= EF");
  re_bound->add_option("state", state_path, "State file (JSON)")->required();

  auto* lgm = app.add_subcommand("lgm-apply", "Apply a Kraus set of local operator pairs");
  lgm->add_option("state", state_path, "State file (JSON)")->required();
  lgm->add_option("kraus", kraus_path, "Kraus set: [[A, B], ...] (JSON)")->required();

  std::string family_name;
  SweepSpec spec;
  double sweep_min = -1.0, sweep_max = -1.0;
  int steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Closed-form curves as CSV");
  sweep->add_option("family", family_name, "werner, bell-mixture or departure")->required();
  sweep->add_option("--min", sweep_min, "First parameter value");
  sweep->add_option("--max", sweep_max, "Last parameter value");
  sweep->add_option("--steps", steps, "Number of rows (default 51)");

  VerifyConfig vcfg;
  std::string replay_path;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--only", vcfg.only, "Run a single property");
  verify->add_option("--samples", vcfg.samples, "Samples per property (default: per property)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--replay", replay_path, "Re-run a failing sample written by an earlier run");
  verify->add_flag("--inject-broken-tolerance", vcfg.break_tolerance,
                   "Self-test: make every threshold unreachable");
  verify->add_flag("--list", list, "List the properties and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  if (*measure) {
    emit(cmd_measure(mre::decode_state(mre::read_json_file(state_path)), cfg), cfg);
    return kOk;
  }
  if (*search) {
    const mre::Json report = cmd_search(mre::decode_state(mre::read_json_file(state_path)), cfg);
    emit(report, cfg);
    return report.at("converged").get<bool>() ? kOk : kInternalError;
  }
  if (*re_bound) {
    const mre::Json report = cmd_re_bound(mre::decode_state(mre::read_json_file(state_path)), cfg);
    emit(report, cfg);
    return report.at("holds").get<bool>() ? kOk : kPropertyViolation;
  }
  if (*lgm) {
    const auto state = mre::decode_state(mre::read_json_file(state_path));
    const auto set = mre::decode_kraus_set(mre::read_json_file(kraus_path));
    emit(cmd_lgm_apply(state, set), cfg);
    return kOk;
  }
  if (*sweep) {
    spec = SweepSpec::defaults(parse_family(family_name));
    if (sweep_min >= 0.0) spec.min = sweep_min;
    if (sweep_max >= 0.0) spec.max = sweep_max;
    if (steps != 0) spec.steps = steps;
    const SweepTable table = run_sweep(spec, cfg);
    Sink sink(cfg.output);
    write_csv(table, sink.stream());
    const auto issues = check_orderings(spec, table);
    for (const auto& msg : issues) std::cerr << "mre: ordering violated at " << msg << '\n';
    return issues.empty() ? kOk : kPropertyViolation;
  }
  if (list) {
    for (const auto& p : verify_properties())
      std::cout << p.name << "  (" << p.default_samples << " samples, threshold " << format_number(p.threshold)
                << ")  " << p.description << '\n';
    return kOk;
  }
  if (!replay_path.empty()) {
    const PropertyResult r = replay_sample(mre::read_json_file(replay_path));
    VerifyReport report;
    report.results.push_back(r);
    emit(report.to_json(), cfg);
    return r.passed ? kOk : kPropertyViolation;
  }
  vcfg.run = cfg;
  const VerifyReport report = run_verify(vcfg);
  emit(report.to_json(), cfg);
  for (const auto& r : report.results)
    if (!r.passed)
      std::cerr << "mre: property " << r.property << " violated (max residual " << format_number(r.max_residual)
                << ", threshold " << format_number(r.threshold) << ")\n";
  return report.passed() ? kOk : kPropertyViolation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mre::Error& e) {
    std::cerr << "mre: error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const mre::Json::exception& e) {
    std::cerr << "mre: error: malformed JSON content: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "mre: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
