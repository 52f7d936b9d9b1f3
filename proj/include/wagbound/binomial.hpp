#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wagbound/concentration.hpp"

namespace wagbound {

namespace detail {

inline double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace detail

/// ln P(Binomial(n, p) <= k), summed incrementally in the log domain so the
/// result stays finite where the linear-domain CDF underflows.
inline double log_binomial_cdf(long long k, long long n, double p) {
  detail::check_count(n, "trial count");
  if (k < 0 || k > n) throw std::invalid_argument("successes k must satisfy 0 <= k <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability p must lie in [0, 1]");
  if (k == n || p == 0.0) return 0.0;
  if (p == 1.0) return -std::numeric_limits<double>::infinity();

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  // pmf(i+1)/pmf(i) = (n-i)/(i+1) * p/(1-p)
  double log_pmf = static_cast<double>(n) * log_q;
  double log_sum = log_pmf;
  for (long long i = 1; i <= k; ++i) {
    log_pmf += std::log(static_cast<double>(n - i + 1)) - std::log(static_cast<double>(i)) +
               log_p - log_q;
    log_sum = detail::log_add_exp(log_sum, log_pmf);
  }
  return std::min(log_sum, 0.0);
}

/// Smallest p in [k/n, 1] with P(Binomial(n, p) <= k) <= delta: the exact
/// upper confidence bound on an error rate observed as k errors in n trials.
///
/// Bisection to absolute tolerance 1e-10. The initial bracket is seeded with
/// the Hoeffding radius, which the exact inversion can never exceed. Returns
/// 1 for k = n, where no p below 1 pushes the CDF under delta.
inline double binomial_upper_bound(long long k, long long n, ConfidenceLevel delta) {
  detail::check_count(n, "trial count");
  if (k < 0 || k > n) throw std::invalid_argument("successes k must satisfy 0 <= k <= n");
  if (k == n) return 1.0;

  constexpr double kTol = 1e-10;
  const double p_hat = static_cast<double>(k) / static_cast<double>(n);
  const double log_delta = std::log(delta.value());
  if (log_binomial_cdf(k, n, p_hat) <= log_delta) return p_hat;

  double lo = p_hat;  // CDF(lo) > delta
  double hi = std::min(1.0, p_hat + hoeffding_radius(n, delta));  // CDF(hi) <= delta
  while (hi - lo > kTol) {
    const double mid = 0.5 * (lo + hi);
    if (log_binomial_cdf(k, n, mid) <= log_delta)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

/// Exact-binomial realization of the backend, anchored at an observed error
/// count. tail(n, eps) is the probability that a true rate of k/n + eps
/// yields at most k errors in n trials; radius inverts it via
/// binomial_upper_bound. At eps = 0 the tail is the trivial bound 1,
/// matching the backend contract.
class BinomialBackend final : public ConcentrationBackend {
 public:
  explicit BinomialBackend(long long errors) : errors_(errors) {
    if (errors < 0) throw std::invalid_argument("observed error count must be >= 0");
  }

  long long errors() const noexcept { return errors_; }

  double tail(long long n, double eps) const override { return std::exp(log_tail(n, eps)); }

  double log_tail(long long n, double eps) const override {
    check_anchor(n);
    detail::check_deviation(eps);
    if (eps == 0.0) return 0.0;
    const double p = static_cast<double>(errors_) / static_cast<double>(n) + eps;
    return log_binomial_cdf(errors_, n, std::min(p, 1.0));
  }

  double radius(long long n, ConfidenceLevel delta) const override {
    check_anchor(n);
    return binomial_upper_bound(errors_, n, delta) -
           static_cast<double>(errors_) / static_cast<double>(n);
  }

  std::string_view name() const noexcept override { return "binomial"; }

 private:
  void check_anchor(long long n) const {
    detail::check_count(n, "sample count");
    if (errors_ > n)
      throw std::invalid_argument("anchored error count exceeds the sample count");
  }

  long long errors_;
};

}  // namespace wagbound
