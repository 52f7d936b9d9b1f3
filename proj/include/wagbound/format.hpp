#pragma once

#include <cstdio>
#include <string>

namespace wagbound {

/// Canonical 6-significant-digit rendering used by every CSV and report
/// field, so identical inputs always serialize to identical bytes.
inline std::string format_sig6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace wagbound
