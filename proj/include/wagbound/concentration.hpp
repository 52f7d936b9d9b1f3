#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wagbound {

/// Bound failure probability delta, constrained to (0, 1).
class ConfidenceLevel {
 public:
  explicit ConfidenceLevel(double delta) : delta_(delta) {
    if (!(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("bound failure probability must lie in (0, 1)");
  }

  double value() const noexcept { return delta_; }

  /// ln(1/delta), the term every radius formula consumes.
  double log_inverse() const noexcept { return -std::log(delta_); }

 private:
  double delta_;
};

namespace detail {

inline void check_deviation(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("deviation eps must be >= 0");
}

inline void check_count(long long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace detail

/// One-sided Hoeffding tail: probability of an empirical mean landing at
/// least eps below its expectation over n samples, bounded by e^(-2 n eps^2).
inline double hoeffding_tail(long long n, double eps) {
  detail::check_count(n, "sample count");
  detail::check_deviation(eps);
  return std::min(1.0, std::exp(-2.0 * static_cast<double>(n) * eps * eps));
}

/// Deviation radius with tail probability exactly delta:
/// sqrt(ln(1/delta) / (2 n)). Round-trips with hoeffding_tail.
inline double hoeffding_radius(long long n, ConfidenceLevel delta) {
  detail::check_count(n, "sample count");
  return std::sqrt(delta.log_inverse() / (2.0 * static_cast<double>(n)));
}

/// Same closed form with a real-valued sample count. The critical-delta
/// decomposition identity uses v = n/a without flooring, so this variant
/// exists for it.
inline double hoeffding_radius_real(double n, ConfidenceLevel delta) {
  if (!(n >= 1.0)) throw std::invalid_argument("sample count must be >= 1");
  return std::sqrt(delta.log_inverse() / (2.0 * n));
}

/// Interchangeable tail/radius pair b(n, eps) <-> eps(n, delta).
///
/// Contract: tail is nonincreasing in n and eps, tail(n, 0) = 1, and
/// tail(n, radius(n, delta)) <= delta.
class ConcentrationBackend {
 public:
  virtual ~ConcentrationBackend() = default;

  virtual double tail(long long n, double eps) const = 0;

  /// ln tail(n, eps). Overridden where the log form stays finite after the
  /// linear-domain tail has underflowed.
  virtual double log_tail(long long n, double eps) const {
    return std::log(tail(n, eps));
  }

  virtual double radius(long long n, ConfidenceLevel delta) const = 0;

  virtual std::string_view name() const noexcept = 0;
};

class HoeffdingBackend final : public ConcentrationBackend {
 public:
  double tail(long long n, double eps) const override { return hoeffding_tail(n, eps); }

  double log_tail(long long n, double eps) const override {
    detail::check_count(n, "sample count");
    detail::check_deviation(eps);
    return -2.0 * static_cast<double>(n) * eps * eps;
  }

  double radius(long long n, ConfidenceLevel delta) const override {
    return hoeffding_radius(n, delta);
  }

  std::string_view name() const noexcept override { return "hoeffding"; }
};

}  // namespace wagbound
