// wagbound: compute WAG and SVOOSH generalization-bound reports, sweep
// crossover curves to CSV, and run Monte Carlo coverage experiments.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wagbound/binomial.hpp"
#include "wagbound/bounds.hpp"
#include "wagbound/format.hpp"
#include "wagbound/trial.hpp"

namespace {

constexpr const char* kCurveHeader = "n,d,a,delta,eps_v,eps_w,delta_star";
constexpr const char* kTrialHeader = "trial,seed,method,anchor_error,Delta,bound,test_error,holds";

// Writes to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output path: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string curve_row(long long n, double d, double a, wagbound::ConfidenceLevel delta) {
  const double eps_v = wagbound::svoosh_radius(wagbound::PowerLawClass{d}, n, delta);
  const double single = wagbound::hoeffding_radius_real(static_cast<double>(n) / a, delta);
  const double delta_star = eps_v - single;
  const double eps_w = delta_star + single;
  using wagbound::format_sig6;
  return std::to_string(n) + "," + format_sig6(d) + "," + format_sig6(a) + "," +
         format_sig6(delta.value()) + "," + format_sig6(eps_v) + "," + format_sig6(eps_w) +
         "," + format_sig6(delta_star);
}

std::vector<long long> sample_grid(long long n_min, long long n_max, int steps,
                                   bool log_scale) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n-min <= n-max");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (steps == 1 && n_min != n_max)
    throw std::invalid_argument("steps = 1 requires n-min = n-max");
  std::vector<long long> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double frac = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    double value;
    if (log_scale) {
      const double lo = std::log(static_cast<double>(n_min));
      const double hi = std::log(static_cast<double>(n_max));
      value = std::exp(lo + frac * (hi - lo));
    } else {
      value = static_cast<double>(n_min) + frac * static_cast<double>(n_max - n_min);
    }
    grid.push_back(std::llround(value));
  }
  return grid;
}

struct BoundsArgs {
  long long n = 0;
  std::optional<double> d;
  std::optional<double> m;
  double a = 0.0;
  double delta = 0.0;
  std::optional<double> disagreement;
  std::string backend = "hoeffding";
  std::optional<long long> anchor_errors;
  bool csv = false;
  std::string out_path;
};

int run_bounds(const BoundsArgs& args) {
  if (args.d.has_value() == args.m.has_value())
    throw std::invalid_argument("give exactly one of --d or --m");
  const wagbound::ConfidenceLevel delta(args.delta);
  wagbound::HypothesisClassSpec spec =
      args.d ? wagbound::HypothesisClassSpec(wagbound::PowerLawClass{*args.d})
             : wagbound::HypothesisClassSpec(wagbound::ExplicitClass{*args.m});
  const wagbound::BoundReport report = wagbound::bound_report(args.n, spec, args.a, delta);

  std::unique_ptr<wagbound::ConcentrationBackend> backend;
  if (args.backend == "binomial") {
    if (!args.anchor_errors)
      throw std::invalid_argument("--backend binomial requires --k (observed error count)");
    backend = std::make_unique<wagbound::BinomialBackend>(*args.anchor_errors);
  } else {
    backend = std::make_unique<wagbound::HoeffdingBackend>();
  }

  OutputTarget target(args.out_path);
  std::ostream& out = target.stream();
  using wagbound::format_sig6;
  out << "n=" << args.n << "\n";
  if (args.d)
    out << "d=" << format_sig6(*args.d) << "\n";
  else
    out << "m=" << format_sig6(*args.m) << "\n";
  out << "a=" << format_sig6(args.a) << "\n";
  out << "delta=" << format_sig6(args.delta) << "\n";
  out << "eps_v=" << format_sig6(report.eps_v) << "\n";
  out << "eps_w=" << format_sig6(report.eps_w) << "\n";
  out << "delta_star=" << format_sig6(report.delta_star) << "\n";
  out << "s=" << format_sig6(report.s) << "\n";
  out << "w_star=" << format_sig6(report.w_star) << "\n";
  out << "eps_for_s=" << format_sig6(report.eps_for_s) << "\n";
  if (report.delta_star < 0.0) out << "note=WAG cannot outperform at this configuration\n";
  if (args.disagreement) {
    const auto setting = wagbound::WagSetting::with_split_divisor(args.n, args.a, delta,
                                                                  *args.disagreement);
    out << "Delta=" << format_sig6(*args.disagreement) << "\n";
    out << "v=" << setting.validation_count << "\n";
    out << "backend=" << backend->name() << "\n";
    out << "eps_w_at_Delta=" << format_sig6(wagbound::wag_radius(setting, *backend)) << "\n";
  }
  if (args.csv) {
    if (!args.d) throw std::invalid_argument("--csv requires --d (power-law class)");
    out << kCurveHeader << "\n" << curve_row(args.n, *args.d, args.a, delta) << "\n";
  }
  return 0;
}

struct SweepArgs {
  long long n_min = 0;
  long long n_max = 0;
  int steps = 25;
  double d = 0.0;
  std::vector<double> a_list;
  double delta = 0.0;
  std::string grid_scale = "log";
  std::string out_path;
};

int run_sweep(const SweepArgs& args) {
  const wagbound::ConfidenceLevel delta(args.delta);
  for (const double a : args.a_list)
    if (!(a > 1.0)) throw std::invalid_argument("every --a must be > 1");
  const auto grid = sample_grid(args.n_min, args.n_max, args.steps, args.grid_scale == "log");

  OutputTarget target(args.out_path);
  std::ostream& out = target.stream();
  out << kCurveHeader << "\n";
  for (const long long n : grid)
    for (const double a : args.a_list) out << curve_row(n, args.d, a, delta) << "\n";
  return 0;
}

struct SimulateArgs {
  std::string method;
  long long n = 0;
  double a = 0.0;
  double delta = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  int grid = 64;
  int max_intervals = 2;
  double eta = 0.1;
  long long n_test = 10000;
  std::vector<double> truth = {0.3, 0.7};
  std::string out_path;
};

int run_simulate(const SimulateArgs& args) {
  const bool wag = args.method == "wag";
  if (wag && !(args.a > 1.0)) throw std::invalid_argument("--method wag requires --a > 1");
  if (args.truth.size() % 2 != 0)
    throw std::invalid_argument("--truth takes lo hi pairs (an even number of values)");

  wagbound::SyntheticTaskSpec task;
  for (std::size_t i = 0; i + 1 < args.truth.size(); i += 2)
    task.truth.push_back({args.truth[i], args.truth[i + 1]});
  task.noise = args.eta;
  task.n_train = args.n;
  task.n_test = args.n_test;

  const wagbound::GridClassSpec cls{args.grid, args.max_intervals};
  const wagbound::ConfidenceLevel delta(args.delta);
  const wagbound::ExperimentConfig config{
      wag ? wagbound::ValidationMethod::wag : wagbound::ValidationMethod::svoosh, args.a,
      delta};
  const auto outcomes = wagbound::run_trials(task, cls, config, args.trials, args.seed);
  const auto summary = wagbound::summarize(outcomes);
  const double threshold = wagbound::coverage_threshold(delta, args.trials);

  {
    OutputTarget target(args.out_path);
    std::ostream& out = target.stream();
    using wagbound::format_sig6;
    out << kTrialHeader << "\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& t = outcomes[i];
      out << i << "," << (args.seed ^ static_cast<std::uint64_t>(i)) << ","
          << wagbound::method_name(t.method) << "," << format_sig6(t.anchor_error) << ","
          << format_sig6(t.disagreement) << "," << format_sig6(t.bound_value) << ","
          << format_sig6(t.test_error) << "," << (t.holds ? "true" : "false") << "\n";
    }
  }

  using wagbound::format_sig6;
  std::cout << "trials=" << summary.trials << "\n";
  std::cout << "failures=" << summary.failures << "\n";
  std::cout << "mean_Delta=" << format_sig6(summary.mean_disagreement) << "\n";
  std::cout << "mean_bound=" << format_sig6(summary.mean_bound) << "\n";
  std::cout << "mean_test_error=" << format_sig6(summary.mean_test_error) << "\n";
  std::cout << "failure_rate=" << format_sig6(summary.failure_rate)
            << " threshold=" << format_sig6(threshold) << "\n";
  return summary.failure_rate <= threshold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WAG vs SVOOSH generalization-bound toolkit"};
  app.require_subcommand(1);
  int status = 0;

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "Report bound quantities at one configuration");
  cmd_bounds->add_option("--n", bounds.n, "Training sample count")->required();
  auto* opt_d = cmd_bounds->add_option("--d", bounds.d, "Power-law class dimension: m(n) = n^d");
  cmd_bounds->add_option("--m", bounds.m, "Explicit hypothesis count")->excludes(opt_d);
  cmd_bounds->add_option("--a", bounds.a, "Split divisor: v = floor(n/a)")->required();
  cmd_bounds->add_option("--delta", bounds.delta, "Bound failure probability")->required();
  cmd_bounds->add_option("--Delta", bounds.disagreement,
                         "Disagreement rate; adds eps_w at this Delta");
  cmd_bounds->add_option("--backend", bounds.backend, "Concentration backend")
      ->check(CLI::IsMember({"hoeffding", "binomial"}));
  cmd_bounds->add_option("--k", bounds.anchor_errors,
                         "Observed error count anchoring the binomial backend");
  cmd_bounds->add_flag("--csv", bounds.csv, "Also emit the report as a single CSV row");
  cmd_bounds->add_option("--out", bounds.out_path, "Write output to a file instead of stdout");
  cmd_bounds->callback([&] { status = run_bounds(bounds); });

  SweepArgs sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "Emit crossover curves over an n grid as CSV");
  cmd_sweep->add_option("--n-min", sweep.n_min, "Smallest n")->required();
  cmd_sweep->add_option("--n-max", sweep.n_max, "Largest n")->required();
  cmd_sweep->add_option("--steps", sweep.steps, "Grid points between n-min and n-max");
  cmd_sweep->add_option("--d", sweep.d, "Power-law class dimension")->required();
  cmd_sweep->add_option("--a", sweep.a_list, "Split divisors (repeatable)")
      ->required()
      ->delimiter(',');
  cmd_sweep->add_option("--delta", sweep.delta, "Bound failure probability")->required();
  cmd_sweep->add_option("--grid-scale", sweep.grid_scale, "Grid spacing")
      ->check(CLI::IsMember({"log", "linear"}));
  cmd_sweep->add_option("--out", sweep.out_path, "Write CSV to a file instead of stdout");
  cmd_sweep->callback([&] { status = run_sweep(sweep); });

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo coverage experiment");
  cmd_sim->add_option("--method", sim.method, "Validation method")
      ->required()
      ->check(CLI::IsMember({"wag", "svoosh"}));
  cmd_sim->add_option("--n", sim.n, "Training sample count per trial")->required();
  cmd_sim->add_option("--a", sim.a, "Split divisor (wag only)");
  cmd_sim->add_option("--delta", sim.delta, "Bound failure probability")->required();
  cmd_sim->add_option("--trials", sim.trials, "Number of trials")->required();
  cmd_sim->add_option("--seed", sim.seed, "Base seed; trial i uses seed XOR i")->required();
  cmd_sim->add_option("--grid", sim.grid, "Grid resolution G");
  cmd_sim->add_option("--k", sim.max_intervals, "Maximum interval count");
  cmd_sim->add_option("--eta", sim.eta, "Label flip probability");
  cmd_sim->add_option("--ntest", sim.n_test, "Test pool size per trial");
  cmd_sim->add_option("--truth", sim.truth, "Truth intervals as lo hi pairs")->expected(-1);
  cmd_sim->add_option("--out", sim.out_path, "Write the per-trial CSV to a file");
  cmd_sim->callback([&] { status = run_simulate(sim); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
