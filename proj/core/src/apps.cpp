#include "pcnn/apps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcnn/metrics.hpp"

namespace pcnn {

namespace {

int intensity_bin(double v) {
  const int bin = static_cast<int>(v * 256.0);
  return bin > 255 ? 255 : bin;
}

// Median with the even-count convention: mean of the two middle order
// statistics. `values` is scratch and gets reordered.
double median_of(std::vector<double>& values) {
  const std::size_t n = values.size();
  const std::size_t mid = n / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (n % 2 == 1) return hi;
  std::nth_element(values.begin(), values.begin() + (mid - 1), values.begin() + mid);
  return (values[mid - 1] + hi) / 2.0;
}

}  // namespace

SegmentationResult segment_sequence(const GrayImage& image, const PulseSequence& seq) {
  if (seq.frames.empty()) throw std::invalid_argument("pulse sequence is empty");
  if (seq.width != image.width || seq.height != image.height) {
    throw std::invalid_argument("sequence shape does not match the image");
  }

  BinaryField cumulative(image.width, image.height);
  BinaryField best_mask(image.width, image.height);
  std::vector<double> curve;
  curve.reserve(seq.frames.size());
  double best_d = 0.0;
  int best_iteration = 0;
  bool any_fired = false;

  for (std::size_t n = 0; n < seq.frames.size(); ++n) {
    const BinaryField& frame = seq.frames[n];
    if (n == 0) {
      // Frame 1 is the synchronization pulse shared by every run; the
      // stimulus-driven accumulation restarts at frame 2.
      cumulative = frame;
    } else if (n == 1) {
      cumulative = frame;
    } else {
      for (std::size_t i = 0; i < cumulative.data.size(); ++i) {
        cumulative.data[i] = cumulative.data[i] | frame.data[i];
      }
    }
    if (!any_fired && cumulative.count() > 0) any_fired = true;

    const double d = cross_entropy(image, cumulative);
    curve.push_back(d);
    if (best_iteration == 0 || d < best_d) {
      best_d = d;
      best_iteration = static_cast<int>(n) + 1;
      best_mask = cumulative;
    }
  }

  if (!any_fired) {
    throw std::logic_error("no pixel fired in any frame; the run is degenerate");
  }
  return SegmentationResult{std::move(best_mask), best_iteration, std::move(curve)};
}

SegmentationResult segment(const GrayImage& image, const PcnnParams& params, Variant variant,
                           int iters) {
  return segment_sequence(image, run(image, params, variant, iters));
}

OtsuResult otsu(const GrayImage& image) {
  std::vector<std::size_t> hist(256, 0);
  for (double v : image.data) ++hist[intensity_bin(v)];
  const double total = static_cast<double>(image.pixel_count());

  double grand_sum = 0.0;
  int lowest_bin = -1, highest_bin = -1;
  for (int b = 0; b < 256; ++b) {
    if (hist[b]) {
      if (lowest_bin < 0) lowest_bin = b;
      highest_bin = b;
      grand_sum += static_cast<double>(b) * static_cast<double>(hist[b]);
    }
  }

  // Single occupied bin: no split exists. Pin the threshold at that bin with
  // an all-zero mask so comparisons on constant images stay well defined.
  if (lowest_bin == highest_bin) {
    return OtsuResult{BinaryField(image.width, image.height), lowest_bin};
  }

  double best = -1.0;
  int plateau_first = 0, plateau_last = 0;
  double w0 = 0.0, sum0 = 0.0;
  for (int t = 0; t < 255; ++t) {
    w0 += static_cast<double>(hist[t]);
    sum0 += static_cast<double>(t) * static_cast<double>(hist[t]);
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double mu0 = sum0 / w0;
    const double mu1 = (grand_sum - sum0) / w1;
    const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (between > best) {
      best = between;
      plateau_first = plateau_last = t;
    } else if (between == best) {
      plateau_last = t;
    }
  }
  const int threshold = (plateau_first + plateau_last) / 2;

  BinaryField mask(image.width, image.height);
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    mask.data[i] = intensity_bin(image.data[i]) > threshold ? 1 : 0;
  }
  return OtsuResult{std::move(mask), threshold};
}

BinaryField kmeans2(const GrayImage& image, int max_iters, unsigned /*seed*/) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  const auto [lo_it, hi_it] = std::minmax_element(image.data.begin(), image.data.end());
  double c0 = *lo_it, c1 = *hi_it;

  BinaryField mask(image.width, image.height);
  if (c0 == c1) return mask;  // single cluster, all-zero mask

  for (int iter = 0; iter < max_iters; ++iter) {
    double sum0 = 0.0, sum1 = 0.0;
    std::size_t n0 = 0, n1 = 0;
    bool changed = false;
    for (std::size_t i = 0; i < image.data.size(); ++i) {
      const double v = image.data[i];
      const std::uint8_t label = std::abs(v - c0) <= std::abs(v - c1) ? 0 : 1;
      if (label != mask.data[i]) changed = true;
      mask.data[i] = label;
      if (label) {
        sum1 += v;
        ++n1;
      } else {
        sum0 += v;
        ++n0;
      }
    }
    const double next0 = n0 ? sum0 / static_cast<double>(n0) : c0;
    const double next1 = n1 ? sum1 / static_cast<double>(n1) : c1;
    if (!changed && next0 == c0 && next1 == c1) break;
    c0 = next0;
    c1 = next1;
  }
  return mask;
}

BinaryField edge_map(const PulseSequence& seq) {
  if (seq.frames.empty()) throw std::invalid_argument("pulse sequence is empty");
  const FireTimeMap times = first_fire_times(seq, 2);
  BinaryField edges(seq.width, seq.height);
  const int w = seq.width, h = seq.height;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const int t = times.times[field_index(i, j, w)];
      const bool differs = (i > 0 && times.times[field_index(i - 1, j, w)] != t) ||
                           (i + 1 < h && times.times[field_index(i + 1, j, w)] != t) ||
                           (j > 0 && times.times[field_index(i, j - 1, w)] != t) ||
                           (j + 1 < w && times.times[field_index(i, j + 1, w)] != t);
      edges.at(i, j) = differs ? 1 : 0;
    }
  }
  return edges;
}

GrayImage median_filter(const GrayImage& image, int radius) {
  if (radius < 1) throw std::invalid_argument("median filter radius must be at least 1");
  std::vector<double> out(image.pixel_count());
  std::vector<double> window;
  window.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
  for (int i = 0; i < image.height; ++i) {
    for (int j = 0; j < image.width; ++j) {
      window.clear();
      for (int di = -radius; di <= radius; ++di) {
        const int ni = i + di;
        if (ni < 0 || ni >= image.height) continue;
        for (int dj = -radius; dj <= radius; ++dj) {
          const int nj = j + dj;
          if (nj < 0 || nj >= image.width) continue;
          window.push_back(image.at(ni, nj));
        }
      }
      out[field_index(i, j, image.width)] = median_of(window);
    }
  }
  return GrayImage(image.width, image.height, std::move(out));
}

DenoiseResult denoise(const GrayImage& image, const PcnnParams& params, int tau) {
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  const PulseSequence seq = run(image, params, Variant::simplified, params.iters);
  const FireTimeMap times = first_fire_times(seq, 2);

  BinaryField candidates(image.width, image.height);
  std::vector<double> window;
  window.reserve(9);
  for (int i = 0; i < image.height; ++i) {
    for (int j = 0; j < image.width; ++j) {
      window.clear();
      for (int di = -1; di <= 1; ++di) {
        const int ni = i + di;
        if (ni < 0 || ni >= image.height) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          const int nj = j + dj;
          if (nj < 0 || nj >= image.width) continue;
          window.push_back(static_cast<double>(times.times[field_index(ni, nj, image.width)]));
        }
      }
      const double med = median_of(window);
      const double t = static_cast<double>(times.times[field_index(i, j, image.width)]);
      if (std::abs(t - med) > static_cast<double>(tau)) candidates.at(i, j) = 1;
    }
  }

  GrayImage repaired = image;
  int repaired_count = 0;
  for (int i = 0; i < image.height; ++i) {
    for (int j = 0; j < image.width; ++j) {
      if (!candidates.at(i, j)) continue;
      window.clear();
      for (int di = -1; di <= 1; ++di) {
        const int ni = i + di;
        if (ni < 0 || ni >= image.height) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          const int nj = j + dj;
          if (nj < 0 || nj >= image.width) continue;
          window.push_back(image.at(ni, nj));
        }
      }
      repaired.at(i, j) = median_of(window);
      ++repaired_count;
    }
  }
  return DenoiseResult{std::move(repaired), repaired_count, std::move(candidates)};
}

}  // namespace pcnn
