#include "pcnn/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace pcnn {

Kernel make_kernel(int radius) {
  if (radius < 1) throw std::invalid_argument("kernel radius must be at least 1");
  const int side = 2 * radius + 1;
  Kernel k{radius, std::vector<double>(static_cast<std::size_t>(side) * side, 0.0)};
  for (int a = -radius; a <= radius; ++a) {
    for (int b = -radius; b <= radius; ++b) {
      if (a == 0 && b == 0) continue;
      const double dist = std::sqrt(static_cast<double>(a) * a + static_cast<double>(b) * b);
      k.weights[static_cast<std::size_t>(a + radius) * side + (b + radius)] = 1.0 / dist;
    }
  }
  return k;
}

}  // namespace pcnn
