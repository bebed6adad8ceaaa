#ifndef PCNN_APPS_HPP
#define PCNN_APPS_HPP

#include <vector>

#include "pcnn/image.hpp"
#include "pcnn/model.hpp"
#include "pcnn/params.hpp"

namespace pcnn {

/// Cross-entropy-selected segmentation of one run.
struct SegmentationResult {
  BinaryField mask;
  int chosen_iteration;                    // 1-based index into the curve
  std::vector<double> cross_entropy_curve; // D per iteration
};

/// Evaluates the cross-entropy of the cumulative fired mask at every
/// iteration and keeps the minimizing one (ties go to the earlier
/// iteration). Frame 1 is the synchronization pulse every run emits, so
/// accumulation restarts at frame 2; the curve still covers all frames.
SegmentationResult segment_sequence(const GrayImage& image, const PulseSequence& seq);

/// run() + segment_sequence() in one call.
SegmentationResult segment(const GrayImage& image, const PcnnParams& params, Variant variant, int iters);

struct OtsuResult {
  BinaryField mask;       // 1 where the intensity bin exceeds the threshold
  int threshold_bin;      // 0..255
};

/// Maximum between-class-variance threshold over a 256-bin histogram. Within
/// a plateau of equally good thresholds the middle one is taken. A constant
/// image degenerates to its own bin and an all-zero mask.
OtsuResult otsu(const GrayImage& image);

/// 1-D 2-means on intensities, centers seeded at the min and max value.
/// Fully deterministic; `seed` is accepted for interface stability and
/// currently unused. A constant image yields one cluster and an all-zero mask.
BinaryField kmeans2(const GrayImage& image, int max_iters, unsigned seed = 0);

/// Marks pixels whose stimulus-driven first-fire time differs from any
/// 4-neighbor's (fire times counted from frame 2).
BinaryField edge_map(const PulseSequence& seq);

/// Median of the (2r+1)^2 neighborhood, truncated to in-bounds pixels; an
/// even-sized window takes the mean of the two middle order statistics.
GrayImage median_filter(const GrayImage& image, int radius);

struct DenoiseResult {
  GrayImage image;
  int repaired_count;
  BinaryField candidate_map;
};

/// Impulse-noise repair guided by pulse timing: runs the simplified model,
/// flags pixels whose first-fire time deviates from the 3x3 neighborhood
/// median by more than tau, and replaces only those with the neighborhood
/// intensity median. Every other pixel is preserved bit-exactly.
DenoiseResult denoise(const GrayImage& image, const PcnnParams& params, int tau = 2);

}  // namespace pcnn

#endif  // PCNN_APPS_HPP
