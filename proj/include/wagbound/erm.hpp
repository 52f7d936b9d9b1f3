#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wagbound/classifier.hpp"
#include "wagbound/synthetic.hpp"

namespace wagbound {

/// Fraction of samples the classifier mislabels.
inline double empirical_error(const IntervalClassifier& c, std::span<const LabeledSample> data) {
  if (data.empty()) throw std::invalid_argument("error rate over an empty sample is undefined");
  long long wrong = 0;
  for (const auto& s : data) wrong += (c.predict(s.x) != s.y);
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

/// Fraction of inputs where the two classifiers predict differently.
/// Symmetric; upper-bounds the difference of their error rates on any
/// labeling of the inputs.
inline double disagreement_rate(const IntervalClassifier& a, const IntervalClassifier& b,
                                std::span<const double> inputs) {
  if (inputs.empty())
    throw std::invalid_argument("disagreement over an empty input set is undefined");
  long long differ = 0;
  for (const double x : inputs) differ += (a.predict(x) != b.predict(x));
  return static_cast<double>(differ) / static_cast<double>(inputs.size());
}

/// Empirical risk minimizer over the grid class. Ties break toward fewer
/// intervals, then the lexicographically smallest cut sequence, so training
/// is a pure function of the data.
///
/// Cells carry integer weights (zero-labels minus one-labels); a suffix DP
/// over (cell, runs opened, inside-a-run) finds the optimal
/// (weight, interval count) pair, and a forward walk that prefers emitting a
/// cut whenever doing so stays optimal recovers the lexicographically
/// smallest optimal cut sequence. O(|data| + G k) after bucketing.
inline IntervalClassifier train_erm_intervals(std::span<const LabeledSample> data,
                                              const GridClassSpec& spec) {
  if (data.empty()) throw std::invalid_argument("cannot train on an empty sample");
  if (spec.grid < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (spec.max_intervals < 0) throw std::invalid_argument("max interval count must be >= 0");

  const int G = spec.grid;
  const int k = spec.max_intervals;

  // Weight of including cell g: errors gained on 0-labels minus errors
  // saved on 1-labels. Samples at x = 1 sit past every cell and predict 0
  // under every hypothesis, so they never influence the choice.
  std::vector<long long> weight(static_cast<std::size_t>(G), 0);
  for (const auto& s : data) {
    if (!(s.x >= 0.0 && s.x <= 1.0)) throw std::invalid_argument("input must lie in [0, 1]");
    const double t = s.x * G;
    if (t >= G) continue;
    weight[static_cast<std::size_t>(t)] += (s.y == 0) ? 1 : -1;
  }

  // suffix[g][r][inside]: lexicographically minimal (added weight, runs
  // opened) over completions of cells g..G-1.
  using Cost = std::pair<long long, int>;
  const auto idx = [k](int g, int r, int inside) {
    return (static_cast<std::size_t>(g) * (k + 1) + r) * 2 + inside;
  };
  std::vector<Cost> suffix(static_cast<std::size_t>(G + 1) * (k + 1) * 2, {0, 0});
  for (int g = G - 1; g >= 0; --g) {
    for (int r = 0; r <= k; ++r) {
      const Cost stay_out = suffix[idx(g + 1, r, 0)];
      const Cost keep_in = {weight[g] + suffix[idx(g + 1, r, 1)].first,
                            suffix[idx(g + 1, r, 1)].second};
      // inside: either close the run at cut g (cell g excluded) or extend it
      suffix[idx(g, r, 1)] = std::min(stay_out, keep_in);
      // outside: either open a run at cut g (if capacity remains) or stay out
      Cost best = stay_out;
      if (r < k) {
        const Cost open = {weight[g] + suffix[idx(g + 1, r + 1, 1)].first,
                           1 + suffix[idx(g + 1, r + 1, 1)].second};
        best = std::min(best, open);
      }
      suffix[idx(g, r, 0)] = best;
    }
  }

  // Forward walk: emit a cut whenever that choice still achieves the state's
  // optimum; emitted cuts are as small as possible, hence lexicographically
  // minimal among optimal solutions.
  std::vector<int> cuts;
  int r = 0, inside = 0;
  for (int g = 0; g < G; ++g) {
    if (inside) {
      if (suffix[idx(g + 1, r, 0)] == suffix[idx(g, r, 1)]) {
        cuts.push_back(g);
        inside = 0;
      }
    } else if (r < k) {
      const Cost open = {weight[g] + suffix[idx(g + 1, r + 1, 1)].first,
                         1 + suffix[idx(g + 1, r + 1, 1)].second};
      if (open == suffix[idx(g, r, 0)]) {
        cuts.push_back(g);
        ++r;
        inside = 1;
      }
    }
  }
  if (inside) cuts.push_back(G);

  std::vector<GridInterval> intervals;
  intervals.reserve(cuts.size() / 2);
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
    intervals.push_back({cuts[i], cuts[i + 1]});
  return IntervalClassifier(G, std::move(intervals));
}

}  // namespace wagbound
