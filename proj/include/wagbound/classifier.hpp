#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wagbound {

/// One interval of a grid classifier, as cut indices into the G+1 grid
/// points over [0, 1]. Covers [lo/G, hi/G); the half-open convention makes
/// every hypothesis a union of whole grid cells, so training and prediction
/// agree exactly.
struct GridInterval {
  int lo;
  int hi;
};

inline bool operator==(const GridInterval& a, const GridInterval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

/// Union-of-intervals predictor on the unit interval: predicts 1 inside any
/// interval, 0 elsewhere. Intervals are sorted and separated by at least one
/// grid cell, so the cut sequence is strictly increasing.
class IntervalClassifier {
 public:
  IntervalClassifier(int grid, std::vector<GridInterval> intervals)
      : grid_(grid), intervals_(std::move(intervals)) {
    if (grid_ < 1) throw std::invalid_argument("grid resolution must be >= 1");
    int prev_hi = -1;
    for (const auto& iv : intervals_) {
      if (iv.lo < 0 || iv.hi > grid_ || iv.lo >= iv.hi)
        throw std::invalid_argument("interval endpoints must satisfy 0 <= lo < hi <= G");
      if (iv.lo <= prev_hi)
        throw std::invalid_argument("intervals must be sorted with strictly increasing cuts");
      prev_hi = iv.hi;
    }
  }

  int grid() const noexcept { return grid_; }
  const std::vector<GridInterval>& intervals() const noexcept { return intervals_; }

  int predict(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("input must lie in [0, 1]");
    const double t = x * grid_;
    for (const auto& iv : intervals_) {
      if (t < iv.lo) return 0;
      if (t < iv.hi) return 1;
    }
    return 0;
  }

  /// Flattened endpoint sequence (lo1, hi1, lo2, hi2, ...), the tie-break
  /// key of the trainer.
  std::vector<int> cut_sequence() const {
    std::vector<int> cuts;
    cuts.reserve(2 * intervals_.size());
    for (const auto& iv : intervals_) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
    return cuts;
  }

 private:
  int grid_;
  std::vector<GridInterval> intervals_;
};

inline bool operator==(const IntervalClassifier& a, const IntervalClassifier& b) {
  return a.grid() == b.grid() && a.intervals() == b.intervals();
}

/// Finite hypothesis class: unions of at most max_intervals intervals with
/// endpoints on a uniform grid of grid+1 cut points. A union of j intervals
/// picks 2j distinct ordered cut points, so the class holds exactly
/// sum_{j=0..k} C(G+1, 2j) hypotheses.
struct GridClassSpec {
  int grid;
  int max_intervals;

  /// Exact below 2^53; the default presets stay far below that.
  double hypothesis_count() const {
    if (grid < 1) throw std::invalid_argument("grid resolution must be >= 1");
    if (max_intervals < 0) throw std::invalid_argument("max interval count must be >= 0");
    double total = 0.0;
    for (int j = 0; 2 * j <= grid + 1 && j <= max_intervals; ++j) {
      double term = 1.0;
      for (int i = 0; i < 2 * j; ++i)
        term = term * static_cast<double>(grid + 1 - i) / static_cast<double>(i + 1);
      total += term;
    }
    return total;
  }
};

}  // namespace wagbound
