#ifndef PCNN_AUTOPARAM_HPP
#define PCNN_AUTOPARAM_HPP

#include <map>
#include <string>
#include <vector>

#include "pcnn/image.hpp"
#include "pcnn/params.hpp"

namespace pcnn {

/// Feeding decay rule: ln(1/sigma) with sigma the population standard
/// deviation of the normalized intensities. Natural log, to match the
/// exp(-alpha) decay factors of the model.
/// Throws std::domain_error for a uniform image (sigma = 0).
double alpha_f_auto(const GrayImage& image);

/// Threshold decay rule: c / mean intensity.
/// Throws std::invalid_argument when c <= 0. The constant has no canonical
/// value; 10 is the library default and deliberately arbitrary.
double alpha_e_auto(const GrayImage& image, double c = 10.0);

/// Inclusive recommendation range for one parameter; scalar use takes the
/// midpoint.
struct ParamRange {
  double lo;
  double hi;
  double midpoint() const { return (lo + hi) / 2.0; }
  bool operator==(const ParamRange&) const = default;
};

/// One catalog entry of recommended settings. `model` tags the published
/// variant the numbers come from. Fields the recommendation does not cover
/// hold the library defaults; ranged recommendations are resolved to their
/// midpoint in `params` and kept verbatim in `ranges` for sweeps.
struct Preset {
  std::string name;   // catalog key, lower-case
  std::string model;  // source model tag (e.g. "SOM-PCNN")
  PcnnParams params;
  std::map<std::string, ParamRange> ranges;

  bool operator==(const Preset&) const = default;
};

/// The built-in catalog, ordered by name.
const std::vector<Preset>& preset_catalog();

/// Catalog lookup; throws NotFoundError for unknown names.
Preset preset(const std::string& name);

/// Plain-text key=value serialization of a catalog (the format shipped in
/// core/data/presets.txt). Doubles are printed with enough digits to
/// round-trip exactly.
std::string serialize_presets(const std::vector<Preset>& presets);

/// Inverse of serialize_presets; throws ParseError on malformed text.
std::vector<Preset> parse_presets(const std::string& text);

}  // namespace pcnn

#endif  // PCNN_AUTOPARAM_HPP
