#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "wagbound/concentration.hpp"
#include "wagbound/hypothesis_class.hpp"

namespace wagbound {

/// Tail of simultaneous validation over the whole class:
/// min(1, m(n) e^(-2 n eps^2)), assembled in the log domain.
inline double svoosh_tail(const HypothesisClassSpec& spec, long long n, double eps) {
  detail::check_deviation(eps);
  const double log_tail =
      log_hypothesis_count(spec, n) - 2.0 * static_cast<double>(n) * eps * eps;
  return std::exp(std::min(0.0, log_tail));
}

/// Bound range for simultaneous validation:
/// sqrt((ln(1/delta) + ln m(n)) / (2 n)).
inline double svoosh_radius(const HypothesisClassSpec& spec, long long n,
                            ConfidenceLevel delta) {
  return std::sqrt((delta.log_inverse() + log_hypothesis_count(spec, n)) /
                   (2.0 * static_cast<double>(n)));
}

namespace detail {

inline void check_disagreement(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("disagreement rate must lie in [0, 1]");
}

}  // namespace detail

/// Withhold-and-gap tail b(v, eps - Delta) over v validation examples.
/// eps <= Delta yields the vacuous bound 1.
inline double wag_tail(long long v, double eps, double disagreement,
                       const ConcentrationBackend& backend) {
  detail::check_count(v, "validation count");
  detail::check_disagreement(disagreement);
  return backend.tail(v, std::max(0.0, eps - disagreement));
}

/// Withhold-and-gap bound range: Delta + radius(v, delta).
inline double wag_radius(long long v, ConfidenceLevel delta, double disagreement,
                         const ConcentrationBackend& backend) {
  detail::check_count(v, "validation count");
  detail::check_disagreement(disagreement);
  return disagreement + backend.radius(v, delta);
}

/// Examples consumed by selecting among m(n) hypotheses: ln m(n) / (2 eps^2).
inline double selection_cost_s(const HypothesisClassSpec& spec, long long n, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("selection cost is undefined at eps = 0");
  return log_hypothesis_count(spec, n) / (2.0 * eps * eps);
}

/// Training budget left for the holdout classifier if withhold-and-gap is to
/// stay competitive: (d / (2 eps^2)) ln n. Coincides with selection_cost_s
/// for power-law classes.
inline double max_holdout_train_size(double dimension, long long n, double eps) {
  if (!(dimension > 0.0)) throw std::invalid_argument("dimension must be > 0");
  detail::check_sample_count(n);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  return dimension * std::log(static_cast<double>(n)) / (2.0 * eps * eps);
}

struct SelectionCostSearch {
  long long cost;
  bool attainable;
};

/// Smallest integer s in [0, n-1] at which single-classifier validation on
/// n-s examples is no tighter than the whole-class bound:
/// tail(n-s, eps) >= min(1, m(n) tail(n, eps)).
///
/// Binary search on s; tail is nonincreasing in its first argument, so the
/// predicate is monotone. When even s = n-1 falls short (the clamped
/// whole-class bound is vacuous but tail(1, eps) < 1), the result carries
/// attainable = false with cost n-1.
inline SelectionCostSearch min_selection_cost(const ConcentrationBackend& backend,
                                              const HypothesisClassSpec& spec,
                                              long long n, double eps) {
  detail::check_sample_count(n);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  const double log_target =
      std::min(0.0, log_hypothesis_count(spec, n) + backend.log_tail(n, eps));
  const auto reaches = [&](long long s) { return backend.log_tail(n - s, eps) >= log_target; };

  if (reaches(0)) return {0, true};
  if (n == 1 || !reaches(n - 1)) return {n - 1, false};
  long long lo = 0, hi = n - 1;  // reaches(lo) is false, reaches(hi) is true
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (reaches(mid) ? hi : lo) = mid;
  }
  return {hi, true};
}

/// Critical disagreement below which withhold-and-gap beats simultaneous
/// validation at equal delta, for m(n) = n^d and v = n/a:
/// (sqrt(ln(1/delta) + d ln n) - sqrt(a ln(1/delta))) / sqrt(2 n).
/// Negative values are meaningful: no disagreement level lets WAG win there.
inline double critical_delta(long long n, double dimension, double a, ConfidenceLevel delta) {
  detail::check_sample_count(n);
  if (!(dimension > 0.0)) throw std::invalid_argument("dimension must be > 0");
  if (!(a > 1.0)) throw std::invalid_argument("split divisor a must be > 1");
  const double log_inv = delta.log_inverse();
  return (std::sqrt(log_inv + dimension * std::log(static_cast<double>(n))) -
          std::sqrt(a * log_inv)) /
         std::sqrt(2.0 * static_cast<double>(n));
}

/// Concentration bound on a disagreement rate estimated over t unlabeled
/// examples.
struct DisagreementBound {
  double delta_hat;          // empirical disagreement over the pool
  long long unlabeled_count; // t
  double eps_t;              // radius(t, delta_t)
  double delta_t;            // failure probability spent on the estimate
};

inline DisagreementBound bound_disagreement(double delta_hat, long long t,
                                            ConfidenceLevel delta_t,
                                            const ConcentrationBackend& backend) {
  detail::check_count(t, "unlabeled pool size");
  detail::check_disagreement(delta_hat);
  return {delta_hat, t, backend.radius(t, delta_t), delta_t.value()};
}

/// Nontransductive withhold-and-gap range: the disagreement estimate plus
/// its own radius plus the validation radius. Total failure probability is
/// delta_w + delta_t by the union bound.
inline double nontransductive_range(long long v, ConfidenceLevel delta_w, double delta_hat,
                                    long long t, ConfidenceLevel delta_t,
                                    const ConcentrationBackend& backend) {
  detail::check_count(v, "validation count");
  if (!(delta_w.value() + delta_t.value() < 1.0))
    throw std::invalid_argument("combined failure probability must stay below 1");
  const DisagreementBound gap = bound_disagreement(delta_hat, t, delta_t, backend);
  return gap.delta_hat + gap.eps_t + backend.radius(v, delta_w);
}

/// Default split of a total failure probability: half on the validation
/// radius, half on the disagreement estimate.
inline double nontransductive_range(long long v, ConfidenceLevel delta_total, double delta_hat,
                                    long long t, const ConcentrationBackend& backend) {
  const ConfidenceLevel half(delta_total.value() / 2.0);
  return nontransductive_range(v, half, delta_hat, t, half, backend);
}

/// Withhold-and-gap configuration: n samples, v of them withheld for
/// validation, plus the disagreement rate entering the bound.
struct WagSetting {
  long long sample_count;     // n
  long long validation_count; // v
  double disagreement;        // Delta
  ConfidenceLevel delta;

  static WagSetting with_validation_count(long long n, long long v, ConfidenceLevel delta,
                                          double disagreement) {
    if (n < 2 || v < 1 || v >= n)
      throw std::invalid_argument("validation count must satisfy 0 < v < n");
    detail::check_disagreement(disagreement);
    return {n, v, disagreement, delta};
  }

  static WagSetting with_split_divisor(long long n, double a, ConfidenceLevel delta,
                                       double disagreement) {
    if (!(a > 1.0)) throw std::invalid_argument("split divisor a must be > 1");
    detail::check_sample_count(n);
    const auto v = static_cast<long long>(std::floor(static_cast<double>(n) / a));
    return with_validation_count(n, v, delta, disagreement);
  }
};

inline double wag_radius(const WagSetting& setting, const ConcentrationBackend& backend) {
  return wag_radius(setting.validation_count, setting.delta, setting.disagreement, backend);
}

/// One record of every closed-form quantity at a configuration.
/// eps_w is evaluated at Delta = delta_star, so eps_w = eps_v by
/// construction and delta_star = eps_v - hoeffding_radius_real(n/a, delta)
/// exactly. The selection quantities are evaluated at eps_for_s, recorded in
/// the report.
struct BoundReport {
  double eps_v;
  double eps_w;
  double delta_star;
  double s;
  double w_star;
  double eps_for_s;
};

inline BoundReport bound_report(long long n, const HypothesisClassSpec& spec, double a,
                                ConfidenceLevel delta,
                                std::optional<double> eps_for_s = std::nullopt) {
  detail::check_sample_count(n);
  if (!(a > 1.0)) throw std::invalid_argument("split divisor a must be > 1");
  const double eps_v = svoosh_radius(spec, n, delta);
  const double single_radius = hoeffding_radius_real(static_cast<double>(n) / a, delta);
  const double delta_star = eps_v - single_radius;
  const double eps = eps_for_s.value_or(eps_v);
  const double s = selection_cost_s(spec, n, eps);
  const double w_star = std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PowerLawClass>)
          return max_holdout_train_size(c.dimension, n, eps);
        else
          return selection_cost_s(spec, n, eps);
      },
      spec);
  return {eps_v, delta_star + single_radius, delta_star, s, w_star, eps};
}

}  // namespace wagbound
