#include "pcnn/params.hpp"

#include <cmath>
#include <stdexcept>

namespace pcnn {

void validate(const PcnnParams& p) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(std::isfinite(p.alpha_f) && p.alpha_f >= 0.0, "alpha_f must be finite and >= 0");
  require(std::isfinite(p.alpha_l) && p.alpha_l >= 0.0, "alpha_l must be finite and >= 0");
  require(std::isfinite(p.alpha_e) && p.alpha_e >= 0.0, "alpha_e must be finite and >= 0");
  require(std::isfinite(p.v_f) && p.v_f >= 0.0, "v_f must be finite and >= 0");
  require(std::isfinite(p.v_l) && p.v_l >= 0.0, "v_l must be finite and >= 0");
  require(std::isfinite(p.v_e) && p.v_e >= 0.0, "v_e must be finite and >= 0");
  require(std::isfinite(p.beta) && p.beta >= 0.0, "beta must be finite and >= 0");
  require(p.radius >= 1, "radius must be at least 1");
  require(p.iters >= 1, "iters must be at least 1");
}

std::vector<std::string> parameter_warnings(const PcnnParams& p) {
  std::vector<std::string> warnings;
  if (p.alpha_e >= 1.0) {
    warnings.push_back("alpha_e = " + std::to_string(p.alpha_e) +
                       " exceeds the recommended bound (< 1); the threshold decays very fast");
  }
  return warnings;
}

}  // namespace pcnn
