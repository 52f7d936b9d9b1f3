#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

namespace wagbound {

/// Hypothesis count grows as m(n) = n^dimension.
struct PowerLawClass {
  double dimension;
};

/// Hypothesis count is a fixed m, independent of the sample size.
struct ExplicitClass {
  double count;
};

using HypothesisClassSpec = std::variant<PowerLawClass, ExplicitClass>;

namespace detail {

inline void check_class_spec(const HypothesisClassSpec& spec) {
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PowerLawClass>) {
          if (!(c.dimension > 0.0))
            throw std::invalid_argument("power-law class dimension must be > 0");
        } else {
          if (!(c.count >= 1.0))
            throw std::invalid_argument("explicit hypothesis count must be >= 1");
        }
      },
      spec);
}

inline void check_sample_count(long long n) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
}

}  // namespace detail

/// ln m(n). All tail products use this form; n^d overflows double well
/// before d reaches 100.
inline double log_hypothesis_count(const HypothesisClassSpec& spec, long long n) {
  detail::check_class_spec(spec);
  detail::check_sample_count(n);
  return std::visit(
      [n](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PowerLawClass>)
          return c.dimension * std::log(static_cast<double>(n));
        else
          return std::log(c.count);
      },
      spec);
}

/// m(n) as a real, no rounding. May overflow to infinity for extreme
/// dimensions; prefer log_hypothesis_count for anything multiplicative.
inline double hypothesis_count(const HypothesisClassSpec& spec, long long n) {
  detail::check_class_spec(spec);
  detail::check_sample_count(n);
  return std::visit(
      [n](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PowerLawClass>)
          return std::pow(static_cast<double>(n), c.dimension);
        else
          return c.count;
      },
      spec);
}

}  // namespace wagbound
