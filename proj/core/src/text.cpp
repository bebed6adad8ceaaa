#include "pcnn/text.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pcnn {

std::string format_double(double v) {
  char buf[40];
  if (std::isfinite(v) && std::floor(v) == v && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace pcnn
