#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wagbound {

// Counter-based generator: the i-th draw is a pure function of (seed, i),
// so tasks are reproducible bit for bit and trials can run in any order.
namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t draw_u64(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
}

/// Uniform draw in [0, 1) with 53 random bits.
inline double draw_unit(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(draw_u64(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace rng

struct LabeledSample {
  double x;
  int y;
};

inline bool operator==(const LabeledSample& a, const LabeledSample& b) {
  return a.x == b.x && a.y == b.y;
}

/// Closed real interval, used for ground-truth positive regions.
struct RealInterval {
  double lo;
  double hi;
};

/// Synthetic 1-D task: uniform inputs on [0, 1), labels from a
/// union-of-intervals truth, flipped independently with probability noise.
struct SyntheticTaskSpec {
  std::vector<RealInterval> truth;
  double noise = 0.0;
  long long n_train = 0;
  long long n_test = 0;
  std::uint64_t seed = 0;
};

struct TaskData {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> test;
};

namespace detail {

inline void check_task_spec(const SyntheticTaskSpec& spec) {
  double prev_hi = -1.0;
  for (const auto& iv : spec.truth) {
    if (!(iv.lo >= 0.0 && iv.hi <= 1.0 && iv.lo <= iv.hi))
      throw std::invalid_argument("truth intervals must be ordered subsets of [0, 1]");
    if (!(iv.lo > prev_hi))
      throw std::invalid_argument("truth intervals must be disjoint and sorted");
    prev_hi = iv.hi;
  }
  if (!(spec.noise >= 0.0 && spec.noise < 0.5))
    throw std::invalid_argument("label noise must lie in [0, 0.5)");
  if (spec.n_train < 1) throw std::invalid_argument("n_train must be >= 1");
  if (spec.n_test < 1) throw std::invalid_argument("n_test must be >= 1");
}

inline int truth_label(const SyntheticTaskSpec& spec, double x) {
  for (const auto& iv : spec.truth) {
    if (x < iv.lo) return 0;
    if (x <= iv.hi) return 1;
  }
  return 0;
}

inline LabeledSample draw_sample(const SyntheticTaskSpec& spec, std::uint64_t index) {
  const double x = rng::draw_unit(spec.seed, 2 * index);
  const bool flip = rng::draw_unit(spec.seed, 2 * index + 1) < spec.noise;
  const int clean = truth_label(spec, x);
  return {x, flip ? 1 - clean : clean};
}

}  // namespace detail

/// Identical specs produce bit-identical output. Train samples use draw
/// indices [0, n_train), test samples the next n_test.
inline TaskData generate_task(const SyntheticTaskSpec& spec) {
  detail::check_task_spec(spec);
  TaskData data;
  data.train.reserve(static_cast<std::size_t>(spec.n_train));
  data.test.reserve(static_cast<std::size_t>(spec.n_test));
  for (long long i = 0; i < spec.n_train; ++i)
    data.train.push_back(detail::draw_sample(spec, static_cast<std::uint64_t>(i)));
  for (long long j = 0; j < spec.n_test; ++j)
    data.test.push_back(
        detail::draw_sample(spec, static_cast<std::uint64_t>(spec.n_train + j)));
  return data;
}

}  // namespace wagbound
