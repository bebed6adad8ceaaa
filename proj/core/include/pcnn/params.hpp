#ifndef PCNN_PARAMS_HPP
#define PCNN_PARAMS_HPP

#include <string>
#include <vector>

namespace pcnn {

/// Model constants for one run. Defaults follow the recommended settings for
/// a stable network (threshold gain 20, decay 0.2, weak linking).
struct PcnnParams {
  double alpha_f = 0.1;   ///< feeding decay time constant
  double alpha_l = 0.05;  ///< linking decay time constant
  double alpha_e = 0.2;   ///< threshold decay time constant
  double v_f = 0.5;       ///< feeding voltage potential
  double v_l = 1.0;       ///< linking voltage potential
  double v_e = 20.0;      ///< threshold amplification after a pulse
  double beta = 0.1;      ///< linking coefficient
  int radius = 1;         ///< coupling kernel radius in pixels
  int iters = 30;         ///< default iteration budget

  bool operator==(const PcnnParams&) const = default;
};

/// Throws std::invalid_argument when a field is non-finite, a rate or
/// potential is negative, or radius/iters fall below 1.
void validate(const PcnnParams& params);

/// Non-fatal advisories: alpha_e >= 1 exceeds the recommended bound, which is
/// worth a warning rather than a rejection.
std::vector<std::string> parameter_warnings(const PcnnParams& params);

}  // namespace pcnn

#endif  // PCNN_PARAMS_HPP
