#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "wagbound/bounds.hpp"
#include "wagbound/classifier.hpp"
#include "wagbound/erm.hpp"
#include "wagbound/synthetic.hpp"

namespace wagbound {

enum class ValidationMethod { wag, svoosh };

inline const char* method_name(ValidationMethod m) {
  return m == ValidationMethod::wag ? "wag" : "svoosh";
}

/// One bound-vs-reality measurement. anchor_error is the holdout validation
/// error for WAG and the full-data training error for SVOOSH; bound_value is
/// anchor_error plus the method's bound range; holds records whether the
/// full-data classifier's test error stayed under the bound.
struct TrialOutcome {
  ValidationMethod method;
  double anchor_error;
  double disagreement;
  double bound_value;
  double test_error;
  bool holds;
};

inline bool operator==(const TrialOutcome& a, const TrialOutcome& b) {
  return a.method == b.method && a.anchor_error == b.anchor_error &&
         a.disagreement == b.disagreement && a.bound_value == b.bound_value &&
         a.test_error == b.test_error && a.holds == b.holds;
}

struct MonteCarloSummary {
  long long trials;
  long long failures;
  double failure_rate;
  double mean_disagreement;
  double mean_bound;
  double mean_test_error;
};

namespace detail {

inline std::vector<double> test_inputs(const TaskData& data) {
  std::vector<double> xs;
  xs.reserve(data.test.size());
  for (const auto& s : data.test) xs.push_back(s.x);
  return xs;
}

}  // namespace detail

/// Withhold-and-gap trial: train the holdout classifier on the first n-v
/// train samples and the full-data classifier on all n, validate the holdout
/// classifier on the withheld last v samples, and measure the disagreement
/// between the two classifiers exactly over the test inputs (the
/// transductive setting).
inline TrialOutcome run_wag_trial(const SyntheticTaskSpec& task, const GridClassSpec& cls,
                                  double a, ConfidenceLevel delta,
                                  const ConcentrationBackend& backend) {
  if (!(a > 1.0)) throw std::invalid_argument("split divisor a must be > 1");
  const auto v = static_cast<long long>(std::floor(static_cast<double>(task.n_train) / a));
  if (v < 1 || task.n_train - v < 1)
    throw std::invalid_argument("split leaves no data for validation or training");

  const TaskData data = generate_task(task);
  const std::span<const LabeledSample> train(data.train);
  const auto holdout_train = train.first(static_cast<std::size_t>(task.n_train - v));
  const auto withheld = train.last(static_cast<std::size_t>(v));

  const IntervalClassifier holdout = train_erm_intervals(holdout_train, cls);
  const IntervalClassifier full = train_erm_intervals(train, cls);

  const double anchor = empirical_error(holdout, withheld);
  const double gap = disagreement_rate(full, holdout, detail::test_inputs(data));
  const double bound = anchor + wag_radius(v, delta, gap, backend);
  const double test_error = empirical_error(full, data.test);
  return {ValidationMethod::wag, anchor, gap, bound, test_error, test_error <= bound};
}

/// Simultaneous-validation trial: bound the full-data classifier through the
/// exact hypothesis count of the grid class.
inline TrialOutcome run_svoosh_trial(const SyntheticTaskSpec& task, const GridClassSpec& cls,
                                     ConfidenceLevel delta) {
  const TaskData data = generate_task(task);
  const IntervalClassifier full = train_erm_intervals(data.train, cls);
  const double anchor = empirical_error(full, data.train);
  const double bound =
      anchor + svoosh_radius(ExplicitClass{cls.hypothesis_count()}, task.n_train, delta);
  const double test_error = empirical_error(full, data.test);
  return {ValidationMethod::svoosh, anchor, 0.0, bound, test_error, test_error <= bound};
}

struct ExperimentConfig {
  ValidationMethod method;
  double split_divisor;  // a; ignored for svoosh
  ConfidenceLevel delta;
};

/// Trial i runs the template task with seed base_seed XOR i. Each trial owns
/// its generator stream, so results are independent of execution order; the
/// returned vector is in trial-index order.
inline std::vector<TrialOutcome> run_trials(const SyntheticTaskSpec& task_template,
                                            const GridClassSpec& cls,
                                            const ExperimentConfig& config, long long trials,
                                            std::uint64_t base_seed) {
  if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
  HoeffdingBackend backend;
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(trials));
  for (long long i = 0; i < trials; ++i) {
    SyntheticTaskSpec task = task_template;
    task.seed = base_seed ^ static_cast<std::uint64_t>(i);
    outcomes.push_back(config.method == ValidationMethod::wag
                           ? run_wag_trial(task, cls, config.split_divisor, config.delta, backend)
                           : run_svoosh_trial(task, cls, config.delta));
  }
  return outcomes;
}

/// Aggregates in the given (trial-index) order.
inline MonteCarloSummary summarize(std::span<const TrialOutcome> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("cannot summarize zero trials");
  MonteCarloSummary s{static_cast<long long>(outcomes.size()), 0, 0.0, 0.0, 0.0, 0.0};
  for (const auto& t : outcomes) {
    s.failures += !t.holds;
    s.mean_disagreement += t.disagreement;
    s.mean_bound += t.bound_value;
    s.mean_test_error += t.test_error;
  }
  const auto n = static_cast<double>(s.trials);
  s.failure_rate = static_cast<double>(s.failures) / n;
  s.mean_disagreement /= n;
  s.mean_bound /= n;
  s.mean_test_error /= n;
  return s;
}

inline MonteCarloSummary monte_carlo(const SyntheticTaskSpec& task_template,
                                     const GridClassSpec& cls, const ExperimentConfig& config,
                                     long long trials, std::uint64_t base_seed) {
  return summarize(run_trials(task_template, cls, config, trials, base_seed));
}

/// Acceptance threshold for a coverage experiment: the nominal failure
/// probability plus three binomial standard errors.
inline double coverage_threshold(ConfidenceLevel delta, long long trials) {
  if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
  const double d = delta.value();
  return d + 3.0 * std::sqrt(d * (1.0 - d) / static_cast<double>(trials));
}

}  // namespace wagbound
