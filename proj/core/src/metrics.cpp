#include "pcnn/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pcnn/text.hpp"

namespace pcnn {

namespace {

// Fixed binning over [0,1]: bin = floor(v*256), v = 1 lands in bin 255.
int intensity_bin(double v) {
  const int bin = static_cast<int>(v * 256.0);
  return bin > 255 ? 255 : bin;
}

void check_same_shape(int wa, int ha, int wb, int hb) {
  if (wa != wb || ha != hb) {
    throw std::invalid_argument("shape mismatch: " + std::to_string(wa) + "x" + std::to_string(ha) +
                                " vs " + std::to_string(wb) + "x" + std::to_string(hb));
  }
}

}  // namespace

double shannon_entropy(const GrayImage& image) {
  std::array<std::size_t, 256> hist{};
  for (double v : image.data) ++hist[intensity_bin(v)];
  const double total = static_cast<double>(image.pixel_count());
  double en = 0.0;
  for (std::size_t n : hist) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / total;
    en -= p * std::log2(p);
  }
  return en;
}

double average_gradient(const GrayImage& image) {
  if (image.width < 2 && image.height < 2) {
    throw std::invalid_argument("average gradient needs at least two pixels");
  }
  double acc = 0.0;
  std::size_t n = 0;
  const int rows = image.height > 1 ? image.height - 1 : 1;
  const int cols = image.width > 1 ? image.width - 1 : 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double dx = image.width > 1 ? image.at(i, j + 1) - image.at(i, j) : 0.0;
      const double dy = image.height > 1 ? image.at(i + 1, j) - image.at(i, j) : 0.0;
      acc += std::sqrt((dx * dx + dy * dy) / 2.0);
      ++n;
    }
  }
  return acc / static_cast<double>(n);
}

double spatial_frequency(const GrayImage& image) {
  if (image.width < 2 && image.height < 2) {
    throw std::invalid_argument("spatial frequency needs at least two pixels");
  }
  double row_acc = 0.0;
  if (image.width > 1) {
    for (int i = 0; i < image.height; ++i) {
      for (int j = 1; j < image.width; ++j) {
        const double d = image.at(i, j) - image.at(i, j - 1);
        row_acc += d * d;
      }
    }
    row_acc /= static_cast<double>(image.height) * (image.width - 1);
  }
  double col_acc = 0.0;
  if (image.height > 1) {
    for (int i = 1; i < image.height; ++i) {
      for (int j = 0; j < image.width; ++j) {
        const double d = image.at(i, j) - image.at(i - 1, j);
        col_acc += d * d;
      }
    }
    col_acc /= static_cast<double>(image.height - 1) * image.width;
  }
  return std::sqrt(row_acc + col_acc);
}

MetricReport fusion_fitness(const GrayImage& image) {
  MetricReport r{};
  r.en = shannon_entropy(image);
  r.ag = average_gradient(image);
  r.sf = spatial_frequency(image);
  r.fitness = r.en + r.ag + r.sf;
  return r;
}

double cross_entropy(const GrayImage& image, const BinaryField& mask) {
  check_same_shape(image.width, image.height, mask.width, mask.height);
  double sum1 = 0.0, sum0 = 0.0;
  std::size_t n1 = 0, n0 = 0;
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    if (mask.data[i]) {
      sum1 += image.data[i];
      ++n1;
    } else {
      sum0 += image.data[i];
      ++n0;
    }
  }
  const double mu1 = n1 ? sum1 / static_cast<double>(n1) : 0.0;
  const double mu0 = n0 ? sum0 / static_cast<double>(n0) : 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    const double s = image.data[i];
    if (mask.data[i]) {
      d += s * std::log(s / mu1);
    } else {
      d += s * std::log(s / mu0);
    }
  }
  return d;
}

double psnr(const GrayImage& reference, const GrayImage& candidate) {
  check_same_shape(reference.width, reference.height, candidate.width, candidate.height);
  double mse = 0.0;
  for (std::size_t i = 0; i < reference.data.size(); ++i) {
    const double d = reference.data[i] - candidate.data[i];
    mse += d * d;
  }
  mse /= static_cast<double>(reference.pixel_count());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(mse);
}

double misclassification_error(const BinaryField& predicted, const BinaryField& truth) {
  check_same_shape(predicted.width, predicted.height, truth.width, truth.height);
  std::size_t mismatch = 0;
  for (std::size_t i = 0; i < predicted.data.size(); ++i) {
    if (predicted.data[i] != truth.data[i]) ++mismatch;
  }
  const double f = static_cast<double>(mismatch) / static_cast<double>(predicted.pixel_count());
  return f <= 1.0 - f ? f : 1.0 - f;
}

std::string to_csv_row(const std::string& name, const MetricReport& report) {
  return name + "," + format_double(report.en) + "," + format_double(report.ag) + "," +
         format_double(report.sf) + "," + format_double(report.fitness);
}

}  // namespace pcnn
