#ifndef PCNN_IMAGE_HPP
#define PCNN_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcnn {

/// Smallest admissible intensity. A zero-intensity neuron would never fire
/// under the simplified model, so inputs are normalized into [kIntensityFloor, 1].
inline constexpr double kIntensityFloor = 1e-3;

inline std::size_t field_index(int row, int col, int width) {
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col);
}

/// Normalized grayscale stimulus. Row-major, index (i,j) = i*width + j,
/// every value in [kIntensityFloor, 1].
struct GrayImage {
  int width;
  int height;
  std::vector<double> data;

  /// Validating constructor; throws std::invalid_argument when dimensions are
  /// nonpositive, the buffer size disagrees, or a value falls outside the range.
  GrayImage(int w, int h, std::vector<double> values);

  /// Builds an image from arbitrary finite values by clamping them into
  /// [kIntensityFloor, 1].
  static GrayImage clamped(int w, int h, std::vector<double> values);

  static GrayImage constant(int w, int h, double value);

  double at(int row, int col) const { return data[field_index(row, col, width)]; }
  double& at(int row, int col) { return data[field_index(row, col, width)]; }
  std::size_t pixel_count() const { return data.size(); }

  bool operator==(const GrayImage&) const = default;
};

/// Binary lattice (pulse frames, masks, edge maps). Values are 0 or 1.
struct BinaryField {
  int width;
  int height;
  std::vector<std::uint8_t> data;

  BinaryField(int w, int h);  // all zeros
  BinaryField(int w, int h, std::vector<std::uint8_t> values);

  std::uint8_t at(int row, int col) const { return data[field_index(row, col, width)]; }
  std::uint8_t& at(int row, int col) { return data[field_index(row, col, width)]; }
  std::size_t pixel_count() const { return data.size(); }

  /// Number of set pixels.
  int count() const;

  bool operator==(const BinaryField&) const = default;
};

/// Per-pixel hierarchy labels in {1..levels}.
struct LevelImage {
  int width;
  int height;
  int levels;
  std::vector<int> data;
};

}  // namespace pcnn

#endif  // PCNN_IMAGE_HPP
