#include "pcnn/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcnn {

namespace {

void check_shape(int w, int h, std::size_t size) {
  if (w < 1 || h < 1) {
    throw std::invalid_argument("image dimensions must be at least 1x1, got " + std::to_string(w) +
                                "x" + std::to_string(h));
  }
  if (size != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
    throw std::invalid_argument("buffer size " + std::to_string(size) + " does not match " +
                                std::to_string(w) + "x" + std::to_string(h));
  }
}

}  // namespace

GrayImage::GrayImage(int w, int h, std::vector<double> values)
    : width(w), height(h), data(std::move(values)) {
  check_shape(w, h, data.size());
  for (double v : data) {
    if (!(v >= kIntensityFloor && v <= 1.0)) {
      throw std::invalid_argument("intensity " + std::to_string(v) + " outside [" +
                                  std::to_string(kIntensityFloor) + ", 1]");
    }
  }
}

GrayImage GrayImage::clamped(int w, int h, std::vector<double> values) {
  check_shape(w, h, values.size());
  for (double& v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot clamp a non-finite intensity");
    v = std::clamp(v, kIntensityFloor, 1.0);
  }
  return GrayImage(w, h, std::move(values));
}

GrayImage GrayImage::constant(int w, int h, double value) {
  return GrayImage(w, h, std::vector<double>(static_cast<std::size_t>(w) * h, value));
}

BinaryField::BinaryField(int w, int h)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {
  check_shape(w, h, data.size());
}

BinaryField::BinaryField(int w, int h, std::vector<std::uint8_t> values)
    : width(w), height(h), data(std::move(values)) {
  check_shape(w, h, data.size());
  for (std::uint8_t v : data) {
    if (v > 1) throw std::invalid_argument("binary field value must be 0 or 1");
  }
}

int BinaryField::count() const {
  int n = 0;
  for (std::uint8_t v : data) n += v;
  return n;
}

}  // namespace pcnn
