#include "pcnn/model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "pcnn/errors.hpp"

namespace pcnn {

namespace {

// Weighted sum of fired neighbors for every pixel. Coordinates are clamped to
// the lattice (edge replication), which keeps uniform states exactly uniform.
std::vector<double> pulse_convolve(const std::vector<std::uint8_t>& y, int width, int height,
                                   const Kernel& kernel) {
  std::vector<double> out(y.size(), 0.0);
  const int r = kernel.radius;
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      double acc = 0.0;
      for (int di = -r; di <= r; ++di) {
        const int ni = std::clamp(i + di, 0, height - 1);
        for (int dj = -r; dj <= r; ++dj) {
          const int nj = std::clamp(j + dj, 0, width - 1);
          if (y[field_index(ni, nj, width)]) acc += kernel.at(di, dj);
        }
      }
      out[field_index(i, j, width)] = acc;
    }
  }
  return out;
}

void check_shapes(const PcnnState& s, const GrayImage& img) {
  if (s.width != img.width || s.height != img.height) {
    throw std::invalid_argument("state is " + std::to_string(s.width) + "x" + std::to_string(s.height) +
                                " but image is " + std::to_string(img.width) + "x" +
                                std::to_string(img.height));
  }
}

void check_finite(const PcnnState& s) {
  const auto scan = [&](const std::vector<double>& field, const char* name) {
    for (double v : field) {
      if (!std::isfinite(v)) {
        throw NumericError(std::string("non-finite value in field ") + name + " at step " +
                           std::to_string(s.step));
      }
    }
  };
  scan(s.f, "F");
  scan(s.l, "L");
  scan(s.u, "U");
  scan(s.e, "E");
}

PcnnState blank_next(const PcnnState& s) {
  PcnnState n;
  n.width = s.width;
  n.height = s.height;
  n.step = s.step + 1;
  const std::size_t count = s.f.size();
  n.f.resize(count);
  n.l.resize(count);
  n.u.resize(count);
  n.e.resize(count);
  n.y.resize(count);
  return n;
}

// Modulation, threshold and pulse shared by every stepping rule.
void finish_step(PcnnState& n, const PcnnState& old, const PcnnParams& p) {
  const double decay_e = std::exp(-p.alpha_e);
  const std::size_t count = n.f.size();
  for (std::size_t i = 0; i < count; ++i) {
    n.u[i] = n.f[i] * (1.0 + p.beta * n.l[i]);
    n.e[i] = decay_e * old.e[i] + p.v_e * static_cast<double>(old.y[i]);
    n.y[i] = n.u[i] > n.e[i] ? 1 : 0;
  }
  check_finite(n);
}

}  // namespace

Variant variant_from_string(const std::string& name) {
  if (name == "full") return Variant::full;
  if (name == "simplified") return Variant::simplified;
  if (name == "sf-fed" || name == "sf_fed") return Variant::sf_fed;
  if (name == "srg") return Variant::srg;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected full, simplified, sf-fed or srg)");
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::full: return "full";
    case Variant::simplified: return "simplified";
    case Variant::sf_fed: return "sf-fed";
    case Variant::srg: return "srg";
  }
  throw std::invalid_argument("unknown variant value");
}

PcnnState init_state(const GrayImage& image, const PcnnParams& params) {
  validate(params);
  PcnnState s;
  s.width = image.width;
  s.height = image.height;
  s.step = 0;
  s.f = image.data;
  const std::size_t count = image.pixel_count();
  s.l.assign(count, 0.0);
  s.u.assign(count, 0.0);
  s.e.assign(count, 0.0);
  s.y.assign(count, 0);
  return s;
}

PcnnState step_full(const PcnnState& state, const GrayImage& image, const PcnnParams& params,
                    const Kernel& m_kernel, const Kernel& w_kernel) {
  check_shapes(state, image);
  const double decay_f = std::exp(-params.alpha_f);
  const double decay_l = std::exp(-params.alpha_l);
  const std::vector<double> feed_in = pulse_convolve(state.y, state.width, state.height, m_kernel);
  const std::vector<double> link_in = pulse_convolve(state.y, state.width, state.height, w_kernel);

  PcnnState next = blank_next(state);
  const std::size_t count = next.f.size();
  for (std::size_t i = 0; i < count; ++i) {
    next.f[i] = decay_f * state.f[i] + image.data[i] + params.v_f * feed_in[i];
    next.l[i] = decay_l * state.l[i] + params.v_l * link_in[i];
  }
  finish_step(next, state, params);
  return next;
}

PcnnState step_simplified(const PcnnState& state, const GrayImage& image, const PcnnParams& params,
                          const Kernel& w_kernel) {
  check_shapes(state, image);
  const std::vector<double> link_in = pulse_convolve(state.y, state.width, state.height, w_kernel);

  PcnnState next = blank_next(state);
  const std::size_t count = next.f.size();
  for (std::size_t i = 0; i < count; ++i) {
    next.f[i] = image.data[i];
    next.l[i] = params.v_l * link_in[i];
  }
  finish_step(next, state, params);
  return next;
}

PcnnState step_srg(const PcnnState& state, const GrayImage& image, const PcnnParams& params) {
  check_shapes(state, image);
  const BinaryField linked =
      srg_linking_step(BinaryField(state.width, state.height, state.y), params.radius);

  PcnnState next = blank_next(state);
  const std::size_t count = next.f.size();
  for (std::size_t i = 0; i < count; ++i) {
    next.f[i] = image.data[i];
    next.l[i] = static_cast<double>(linked.data[i]);
  }
  finish_step(next, state, params);
  return next;
}

BinaryField srg_linking_step(const BinaryField& y_prev, int radius) {
  if (radius < 1) throw std::invalid_argument("neighborhood radius must be at least 1");
  BinaryField out(y_prev.width, y_prev.height);
  for (int i = 0; i < y_prev.height; ++i) {
    for (int j = 0; j < y_prev.width; ++j) {
      std::uint8_t fired = 0;
      for (int di = -radius; di <= radius && !fired; ++di) {
        const int ni = std::clamp(i + di, 0, y_prev.height - 1);
        for (int dj = -radius; dj <= radius; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int nj = std::clamp(j + dj, 0, y_prev.width - 1);
          if (y_prev.at(ni, nj)) {
            fired = 1;
            break;
          }
        }
      }
      out.at(i, j) = fired;
    }
  }
  return out;
}

GrayImage spatial_frequency_feeding(const GrayImage& image) {
  if (image.width < 2 || image.height < 2) {
    throw std::invalid_argument("spatial-frequency feeding needs at least a 2x2 image");
  }
  std::vector<double> raw(image.pixel_count());
  for (int i = 0; i < image.height; ++i) {
    for (int j = 0; j < image.width; ++j) {
      const double v = image.at(i, j);
      const double up = i > 0 ? image.at(i - 1, j) : v;
      const double left = j > 0 ? image.at(i, j - 1) : v;
      const double dv = v - up;
      const double dh = v - left;
      raw[field_index(i, j, image.width)] = dv * dv + dh * dh;
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi == lo) {
    return GrayImage::constant(image.width, image.height, kIntensityFloor);
  }
  for (double& v : raw) {
    v = kIntensityFloor + (1.0 - kIntensityFloor) * (v - lo) / (hi - lo);
  }
  return GrayImage::clamped(image.width, image.height, std::move(raw));
}

PulseSequence run(const GrayImage& image, const PcnnParams& params, Variant variant, int iters) {
  if (iters < 1) throw std::invalid_argument("iteration count must be at least 1");
  validate(params);

  std::optional<GrayImage> sf_stimulus;
  if (variant == Variant::sf_fed) sf_stimulus = spatial_frequency_feeding(image);
  const GrayImage& stimulus = sf_stimulus ? *sf_stimulus : image;

  const Kernel m_kernel = make_kernel(params.radius);
  const Kernel w_kernel = make_kernel(params.radius);

  PcnnState state = init_state(stimulus, params);
  PulseSequence seq{image.width, image.height, params, {}};
  seq.frames.reserve(static_cast<std::size_t>(iters));
  for (int n = 1; n <= iters; ++n) {
    switch (variant) {
      case Variant::full:
        state = step_full(state, stimulus, params, m_kernel, w_kernel);
        break;
      case Variant::simplified:
      case Variant::sf_fed:
        state = step_simplified(state, stimulus, params, w_kernel);
        break;
      case Variant::srg:
        state = step_srg(state, stimulus, params);
        break;
    }
    seq.frames.emplace_back(state.width, state.height, state.y);
  }
  return seq;
}

HierarchicalOutput hierarchical_output(const PcnnState& state, int k) {
  if (k < 1) throw std::invalid_argument("hierarchy count must be at least 1");
  if (state.step < 1) throw std::invalid_argument("state has not been stepped yet");

  const std::size_t count = state.u.size();
  std::vector<double> xi(count);
  for (std::size_t i = 0; i < count; ++i) xi[i] = state.u[i] - state.e[i];
  const double lo = *std::min_element(xi.begin(), xi.end());
  for (double& v : xi) v -= lo;
  const double hi = *std::max_element(xi.begin(), xi.end());

  LevelImage levels{state.width, state.height, k, std::vector<int>(count, 1)};
  if (hi > 0.0) {
    for (std::size_t i = 0; i < count; ++i) {
      const int level = static_cast<int>(std::ceil(xi[i] / hi * static_cast<double>(k)));
      levels.data[i] = std::max(level, 1);
    }
  }

  // Local variation of xi over the 8-neighborhood, kept as a diagnostic.
  std::vector<double> variation(count, 0.0);
  for (int i = 0; i < state.height; ++i) {
    for (int j = 0; j < state.width; ++j) {
      double acc = 0.0;
      for (int di = -1; di <= 1; ++di) {
        const int ni = std::clamp(i + di, 0, state.height - 1);
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int nj = std::clamp(j + dj, 0, state.width - 1);
          acc += std::abs(xi[field_index(i, j, state.width)] - xi[field_index(ni, nj, state.width)]);
        }
      }
      variation[field_index(i, j, state.width)] = acc;
    }
  }
  return HierarchicalOutput{std::move(levels), std::move(variation)};
}

FireTimeMap first_fire_times(const PulseSequence& seq, int first_frame) {
  if (seq.frames.empty()) throw std::invalid_argument("pulse sequence is empty");
  if (first_frame < 1) throw std::invalid_argument("first_frame is 1-based");
  FireTimeMap map{seq.width, seq.height,
                  std::vector<int>(static_cast<std::size_t>(seq.width) * seq.height, 0)};
  for (std::size_t n = static_cast<std::size_t>(first_frame) - 1; n < seq.frames.size(); ++n) {
    const BinaryField& frame = seq.frames[n];
    for (std::size_t i = 0; i < map.times.size(); ++i) {
      if (map.times[i] == 0 && frame.data[i]) map.times[i] = static_cast<int>(n) + 1;
    }
  }
  return map;
}

std::vector<int> time_signature(const PulseSequence& seq) {
  if (seq.frames.empty()) throw std::invalid_argument("pulse sequence is empty");
  std::vector<int> counts;
  counts.reserve(seq.frames.size());
  for (const BinaryField& frame : seq.frames) counts.push_back(frame.count());
  return counts;
}

}  // namespace pcnn
