#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace ghmetric {

// 12 significant digits, the precision every CLI scalar is printed with.
inline std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string join12(const std::vector<double>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += fmt12(values[i]);
  }
  return out;
}

}  // namespace ghmetric
