#ifndef PCNN_KERNEL_HPP
#define PCNN_KERNEL_HPP

#include <cstddef>
#include <vector>

namespace pcnn {

/// Coupling weight grid of size (2*radius+1)^2 with a zero center. The
/// default weights are inverse Euclidean distance, so the radius-1 kernel is
/// the classic 8-neighborhood.
struct Kernel {
  int radius;
  std::vector<double> weights;  // row-major over offsets, center at (radius, radius)

  double at(int di, int dj) const {
    const int side = 2 * radius + 1;
    return weights[static_cast<std::size_t>(di + radius) * side + static_cast<std::size_t>(dj + radius)];
  }

  bool operator==(const Kernel&) const = default;
};

/// Inverse-distance kernel: weight(a,b) = 1/sqrt(a^2+b^2), center 0.
/// Throws std::invalid_argument when radius < 1.
Kernel make_kernel(int radius);

}  // namespace pcnn

#endif  // PCNN_KERNEL_HPP
