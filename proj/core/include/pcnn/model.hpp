#ifndef PCNN_MODEL_HPP
#define PCNN_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcnn/image.hpp"
#include "pcnn/kernel.hpp"
#include "pcnn/params.hpp"

namespace pcnn {

/// Per-pixel network state after `step` synchronous iterations.
/// f: feeding, l: linking, u: internal activity, e: dynamic threshold,
/// y: pulse output of the latest step.
struct PcnnState {
  int width;
  int height;
  std::vector<double> f;
  std::vector<double> l;
  std::vector<double> u;
  std::vector<double> e;
  std::vector<std::uint8_t> y;
  int step = 0;
};

/// Which stepping rule a run uses.
///   full        - feeding and linking both keep exponential memory
///   simplified  - feeding is the stimulus itself, linking is memoryless
///   sf_fed      - simplified rule driven by the spatial-frequency image
///   srg         - simplified rule with step-function (region growing) linking
enum class Variant { full, simplified, sf_fed, srg };

/// Parses "full", "simplified", "sf-fed"/"sf_fed", "srg".
/// Throws std::invalid_argument for anything else.
Variant variant_from_string(const std::string& name);
std::string to_string(Variant variant);

/// Ordered pulse frames Y[1..N] of one run.
struct PulseSequence {
  int width;
  int height;
  PcnnParams params;
  std::vector<BinaryField> frames;
};

/// Per-pixel frame index (1-based) of the first pulse; 0 = never fired.
struct FireTimeMap {
  int width;
  int height;
  std::vector<int> times;
};

/// Quantization of internal activity against the threshold into k levels,
/// with the local variation field kept as a diagnostic.
struct HierarchicalOutput {
  LevelImage levels;
  std::vector<double> variation;
};

/// Fresh state for an image: f carries the stimulus, everything else is zero.
/// With a zero threshold every neuron fires on the first step, which makes
/// frame 1 a synchronization pulse common to all runs.
PcnnState init_state(const GrayImage& image, const PcnnParams& params);

/// One synchronous step of the full model:
///   F' = exp(-alpha_f)*F + S + v_f*(M (*) Y)
///   L' = exp(-alpha_l)*L + v_l*(W (*) Y)
///   U' = F'*(1 + beta*L'),  E' = exp(-alpha_e)*E + v_e*Y,  Y' = U' > E'
/// Neighbor aggregation clamps coordinates to the lattice (edge replication),
/// so a spatially uniform state stays uniform for any parameters.
/// Only the previous state is read; pixels may be computed in any order.
PcnnState step_full(const PcnnState& state, const GrayImage& image, const PcnnParams& params,
                    const Kernel& m_kernel, const Kernel& w_kernel);

/// Simplified model step: F' = S and L' = v_l*(W (*) Y); U', E', Y' as above.
PcnnState step_simplified(const PcnnState& state, const GrayImage& image, const PcnnParams& params,
                          const Kernel& w_kernel);

/// Region-growing step: F' = S and L' is the step function of the fired
/// neighbor count, substituted directly into U' = F'*(1 + beta*L').
PcnnState step_srg(const PcnnState& state, const GrayImage& image, const PcnnParams& params);

/// Binary linking field: 1 where any neighbor within `radius` fired.
/// The center pixel itself is not its own neighbor.
BinaryField srg_linking_step(const BinaryField& y_prev, int radius);

/// Per-pixel squared forward differences (against the up and left neighbors,
/// missing neighbors count as the pixel itself), min-max normalized into
/// [kIntensityFloor, 1]. Requires width and height >= 2.
GrayImage spatial_frequency_feeding(const GrayImage& image);

/// Runs `iters` steps of the chosen variant from a fresh state and collects
/// the pulse frames. Throws NumericError when a state turns non-finite,
/// naming the first offending step.
PulseSequence run(const GrayImage& image, const PcnnParams& params, Variant variant, int iters);

/// Quantizes xi = U - E (shifted so min(xi) = 0) into k levels by
/// Y = ceil(xi/max(xi) * k); xi = 0 maps to level 1, and a degenerate
/// max(xi) = 0 puts every pixel in level 1. The variation field sums
/// |xi - xi_neighbor| over the 8-neighborhood.
HierarchicalOutput hierarchical_output(const PcnnState& state, int k);

/// First-fire times counted from frame `first_frame` (1-based). The default
/// covers the whole sequence; analyses that want stimulus-driven times pass 2
/// to skip the synchronization pulse.
FireTimeMap first_fire_times(const PulseSequence& seq, int first_frame = 1);

/// Fired-pixel count per frame.
std::vector<int> time_signature(const PulseSequence& seq);

}  // namespace pcnn

#endif  // PCNN_MODEL_HPP
