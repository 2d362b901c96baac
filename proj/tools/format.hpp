#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace dqd::cli {

// 12 significant digits, locale independent ('.' decimal separator always).
inline std::string fmt12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace dqd::cli
