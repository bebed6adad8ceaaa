#include "pcnn/autoparam.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "pcnn/errors.hpp"
#include "pcnn/text.hpp"

namespace pcnn {

double alpha_f_auto(const GrayImage& image) {
  const double n = static_cast<double>(image.pixel_count());
  double mean = 0.0;
  for (double v : image.data) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : image.data) var += (v - mean) * (v - mean);
  var /= n;
  const double sigma = std::sqrt(var);
  if (sigma == 0.0) {
    throw std::domain_error("alpha_f rule needs intensity spread; the image is uniform");
  }
  return std::log(1.0 / sigma);
}

double alpha_e_auto(const GrayImage& image, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant c must be positive");
  double mean = 0.0;
  for (double v : image.data) mean += v;
  mean /= static_cast<double>(image.pixel_count());
  return c / mean;
}

namespace {

std::vector<Preset> build_catalog() {
  const PcnnParams base;  // library defaults fill fields a recommendation does not cover
  std::vector<Preset> catalog;

  {
    Preset p{"hmm-pcnn", "HMM-PCNN", base, {}};
    p.params.v_l = 0.5;
    p.params.v_f = 0.5;
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"pcnn-factoring", "PCNN-Factoring", base, {}};
    p.ranges["beta"] = {0.0, 1.0};
    p.params.beta = p.ranges["beta"].midpoint();
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"pcnn-random", "PCNN-Random", base, {}};
    p.params.v_e = 20.0;
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"pcnn-svm", "PCNN-SVM", base, {}};
    p.params.v_e = 20.0;
    p.params.alpha_e = 0.2;
    p.params.beta = 0.1;
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"s-pcnn", "S-PCNN", base, {}};
    p.params.v_l = 1.0;
    p.params.v_f = 1.0;
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"som-pcnn", "SOM-PCNN", base, {}};
    p.params.v_l = 0.01;
    p.params.v_e = 10.0;
    p.params.alpha_e = 0.089;
    p.params.beta = 0.2;
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"spcnn-cuckoo", "SPCNN-Cuckoo", base, {}};
    p.ranges["v_e"] = {0.0001, 400.0};
    p.ranges["alpha_e"] = {0.0001, 100.0};
    p.ranges["beta"] = {0.0001, 100.0};
    p.params.v_e = p.ranges["v_e"].midpoint();
    p.params.alpha_e = p.ranges["alpha_e"].midpoint();
    p.params.beta = p.ranges["beta"].midpoint();
    catalog.push_back(std::move(p));
  }
  {
    // The published beta is a schedule decaying from 2 to 0.1; kept as the
    // range [0.1, 2] with the midpoint standing in for scalar use.
    Preset p{"spcnn-intensity", "SPCNN-Intensity", base, {}};
    p.params.v_e = 400.0;
    p.ranges["beta"] = {0.1, 2.0};
    p.params.beta = p.ranges["beta"].midpoint();
    catalog.push_back(std::move(p));
  }
  {
    Preset p{"spcnn-nsst", "SPCNN-NSST", base, {}};
    p.params.alpha_e = 0.075;
    catalog.push_back(std::move(p));
  }
  return catalog;
}

double parse_double(const std::string& text, std::size_t offset) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("expected a number, got '" + text + "'", offset);
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

void assign_field(Preset& preset, const std::string& key, const std::string& value,
                  std::size_t offset) {
  if (key == "model") {
    preset.model = value;
    return;
  }
  if (key.starts_with("range.")) {
    const std::string param = key.substr(6);
    const auto comma = value.find(',');
    if (comma == std::string::npos) {
      throw ParseError("range value must be 'lo,hi'", offset);
    }
    const double lo = parse_double(trim(value.substr(0, comma)), offset);
    const double hi = parse_double(trim(value.substr(comma + 1)), offset);
    preset.ranges[param] = {lo, hi};
    return;
  }
  if (key == "radius") {
    preset.params.radius = static_cast<int>(parse_double(value, offset));
    return;
  }
  if (key == "iters") {
    preset.params.iters = static_cast<int>(parse_double(value, offset));
    return;
  }
  const double v = parse_double(value, offset);
  if (key == "alpha_f") preset.params.alpha_f = v;
  else if (key == "alpha_l") preset.params.alpha_l = v;
  else if (key == "alpha_e") preset.params.alpha_e = v;
  else if (key == "v_f") preset.params.v_f = v;
  else if (key == "v_l") preset.params.v_l = v;
  else if (key == "v_e") preset.params.v_e = v;
  else if (key == "beta") preset.params.beta = v;
  else throw ParseError("unknown preset key '" + key + "'", offset);
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = build_catalog();
  return catalog;
}

Preset preset(const std::string& name) {
  for (const Preset& p : preset_catalog()) {
    if (p.name == name) return p;
  }
  throw NotFoundError("no preset named '" + name + "'");
}

std::string serialize_presets(const std::vector<Preset>& presets) {
  std::string out;
  out += "# PCNN parameter presets, one section per recommended setting.\n";
  out += "# 'model' names the published variant the numbers come from; ranged\n";
  out += "# recommendations keep their range and use the midpoint as scalar.\n";
  for (const Preset& p : presets) {
    out += "\n[" + p.name + "]\n";
    out += "model = " + p.model + "\n";
    out += "alpha_f = " + format_double(p.params.alpha_f) + "\n";
    out += "alpha_l = " + format_double(p.params.alpha_l) + "\n";
    out += "alpha_e = " + format_double(p.params.alpha_e) + "\n";
    out += "v_f = " + format_double(p.params.v_f) + "\n";
    out += "v_l = " + format_double(p.params.v_l) + "\n";
    out += "v_e = " + format_double(p.params.v_e) + "\n";
    out += "beta = " + format_double(p.params.beta) + "\n";
    out += "radius = " + std::to_string(p.params.radius) + "\n";
    out += "iters = " + std::to_string(p.params.iters) + "\n";
    for (const auto& [param, range] : p.ranges) {
      out += "range." + param + " = " + format_double(range.lo) + "," + format_double(range.hi) + "\n";
    }
  }
  return out;
}

std::vector<Preset> parse_presets(const std::string& text) {
  std::vector<Preset> presets;
  Preset* current = nullptr;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = trim(text.substr(pos, eol - pos));
    if (line.empty() || line[0] == '#') {
      pos = eol + 1;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", pos);
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ParseError("empty section name", pos);
      presets.push_back(Preset{name, "", PcnnParams{}, {}});
      current = &presets.back();
    } else {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'key = value'", pos);
      if (current == nullptr) throw ParseError("key before any [section]", pos);
      assign_field(*current, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), pos);
    }
    pos = eol + 1;
  }
  for (const Preset& p : presets) validate(p.params);
  return presets;
}

}  // namespace pcnn
