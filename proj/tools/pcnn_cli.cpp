// pcnn: command-line front end for the pulse-coupled neural network library.
//
// Subcommands: run, segment, edges, denoise, signature, sweep, presets.
// Every artifact-producing command echoes its effective configuration to
// <out>/config.txt so results are reproducible from the directory alone.
//
// Exit codes: 0 success, 2 flag/usage errors, 3 parse or I/O errors,
// 4 numeric errors (non-finite simulation state).

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pcnn/apps.hpp"
#include "pcnn/autoparam.hpp"
#include "pcnn/errors.hpp"
#include "pcnn/imgio.hpp"
#include "pcnn/model.hpp"
#include "pcnn/text.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
  std::string input;
  std::string out;
  std::string variant = "simplified";
  int iters = 30;
  std::string preset_name;
  std::optional<double> alpha_f, alpha_l, alpha_e, beta, v_e, v_l, v_f;
  std::optional<int> radius;
};

void add_common_flags(CLI::App& cmd, CommonOpts& o, bool needs_out = true) {
  cmd.add_option("--input", o.input, "Input image (binary 8-bit PGM)")->required();
  auto* out = cmd.add_option("--out", o.out, "Output directory (created if missing)");
  if (needs_out) out->required();
  cmd.add_option("--variant", o.variant, "Model variant: full, simplified, sf-fed, srg")
      ->capture_default_str();
  cmd.add_option("--iters", o.iters, "Iteration budget")->capture_default_str();
  cmd.add_option("--preset", o.preset_name, "Start from a named preset (see 'presets')");
  cmd.add_option("--alpha-f", o.alpha_f, "Override feeding decay");
  cmd.add_option("--alpha-l", o.alpha_l, "Override linking decay");
  cmd.add_option("--alpha-e", o.alpha_e, "Override threshold decay");
  cmd.add_option("--beta", o.beta, "Override linking coefficient");
  cmd.add_option("--ve", o.v_e, "Override threshold amplification V_E");
  cmd.add_option("--vl", o.v_l, "Override linking potential V_L");
  cmd.add_option("--vf", o.v_f, "Override feeding potential V_F");
  cmd.add_option("--radius", o.radius, "Override kernel radius");
}

// Preset first, explicit overrides second.
pcnn::PcnnParams resolve_params(const CommonOpts& o) {
  pcnn::PcnnParams p;
  if (!o.preset_name.empty()) p = pcnn::preset(o.preset_name).params;
  if (o.alpha_f) p.alpha_f = *o.alpha_f;
  if (o.alpha_l) p.alpha_l = *o.alpha_l;
  if (o.alpha_e) p.alpha_e = *o.alpha_e;
  if (o.beta) p.beta = *o.beta;
  if (o.v_e) p.v_e = *o.v_e;
  if (o.v_l) p.v_l = *o.v_l;
  if (o.v_f) p.v_f = *o.v_f;
  if (o.radius) p.radius = *o.radius;
  p.iters = o.iters;
  pcnn::validate(p);
  for (const std::string& w : pcnn::parameter_warnings(p)) {
    std::cerr << "warning: " << w << "\n";
  }
  return p;
}

using pcnn::format_double;

std::string config_text(const std::string& command, const CommonOpts& o,
                        const pcnn::PcnnParams& p, const std::vector<std::string>& extra = {}) {
  std::string text;
  text += "command = " + command + "\n";
  text += "input = " + o.input + "\n";
  text += "variant = " + o.variant + "\n";
  text += "iters = " + std::to_string(p.iters) + "\n";
  text += "preset = " + (o.preset_name.empty() ? std::string("(none)") : o.preset_name) + "\n";
  text += "alpha_f = " + format_double(p.alpha_f) + "\n";
  text += "alpha_l = " + format_double(p.alpha_l) + "\n";
  text += "alpha_e = " + format_double(p.alpha_e) + "\n";
  text += "v_f = " + format_double(p.v_f) + "\n";
  text += "v_l = " + format_double(p.v_l) + "\n";
  text += "v_e = " + format_double(p.v_e) + "\n";
  text += "beta = " + format_double(p.beta) + "\n";
  text += "radius = " + std::to_string(p.radius) + "\n";
  for (const std::string& line : extra) text += line + "\n";
  return text;
}

fs::path ensure_out_dir(const std::string& out) {
  const fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw pcnn::IoError("cannot create output directory '" + out + "'");
  }
  return dir;
}

int worker_count(std::size_t jobs) {
  unsigned n = 0;
  if (const char* env = std::getenv("PCNN_THREADS")) {
    n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

// ---- subcommands ----------------------------------------------------------

int cmd_run(const CommonOpts& o) {
  const pcnn::GrayImage image = pcnn::load_pgm(o.input);
  const pcnn::PcnnParams params = resolve_params(o);
  const pcnn::Variant variant = pcnn::variant_from_string(o.variant);
  const pcnn::PulseSequence seq = pcnn::run(image, params, variant, params.iters);
  const fs::path dir = ensure_out_dir(o.out);
  pcnn::write_sequence(seq, dir);
  pcnn::write_file(dir / "config.txt", config_text("run", o, params));
  return 0;
}

int cmd_signature(const CommonOpts& o) {
  const pcnn::GrayImage image = pcnn::load_pgm(o.input);
  const pcnn::PcnnParams params = resolve_params(o);
  const pcnn::Variant variant = pcnn::variant_from_string(o.variant);
  const pcnn::PulseSequence seq = pcnn::run(image, params, variant, params.iters);
  const fs::path dir = ensure_out_dir(o.out);
  pcnn::write_file(dir / "signature.csv", pcnn::signature_csv(seq));
  pcnn::write_file(dir / "config.txt", config_text("signature", o, params));
  return 0;
}

int cmd_segment(const CommonOpts& o) {
  const pcnn::GrayImage image = pcnn::load_pgm(o.input);
  const pcnn::PcnnParams params = resolve_params(o);
  const pcnn::Variant variant = pcnn::variant_from_string(o.variant);
  const pcnn::SegmentationResult result = pcnn::segment(image, params, variant, params.iters);
  const fs::path dir = ensure_out_dir(o.out);
  pcnn::save_pgm(dir / "mask.pgm", result.mask);
  pcnn::write_file(dir / "curve.csv", pcnn::curve_csv(result.cross_entropy_curve));
  pcnn::write_file(dir / "config.txt", config_text("segment", o, params));
  std::printf("iteration=%d cross_entropy=%.12g\n", result.chosen_iteration,
              result.cross_entropy_curve[static_cast<std::size_t>(result.chosen_iteration) - 1]);
  return 0;
}

int cmd_edges(const CommonOpts& o) {
  const pcnn::GrayImage image = pcnn::load_pgm(o.input);
  const pcnn::PcnnParams params = resolve_params(o);
  const pcnn::Variant variant = pcnn::variant_from_string(o.variant);
  const pcnn::PulseSequence seq = pcnn::run(image, params, variant, params.iters);
  const fs::path dir = ensure_out_dir(o.out);
  pcnn::save_pgm(dir / "edges.pgm", pcnn::edge_map(seq));
  pcnn::write_file(dir / "config.txt", config_text("edges", o, params));
  return 0;
}

int cmd_denoise(const CommonOpts& o, int tau) {
  const pcnn::GrayImage image = pcnn::load_pgm(o.input);
  const pcnn::PcnnParams params = resolve_params(o);
  const pcnn::DenoiseResult result = pcnn::denoise(image, params, tau);
  const fs::path dir = ensure_out_dir(o.out);
  pcnn::save_pgm(dir / "denoised.pgm", result.image);
  pcnn::save_pgm(dir / "candidates.pgm", result.candidate_map);
  pcnn::write_file(dir / "config.txt",
                   config_text("denoise", o, params, {"tau = " + std::to_string(tau)}));
  return 0;
}

struct SweepOpts {
  CommonOpts base;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

void apply_sweep_value(pcnn::PcnnParams& p, const std::string& name, double value) {
  if (name == "alpha-f") p.alpha_f = value;
  else if (name == "alpha-l") p.alpha_l = value;
  else if (name == "alpha-e") p.alpha_e = value;
  else if (name == "beta") p.beta = value;
  else if (name == "ve") p.v_e = value;
  else if (name == "vl") p.v_l = value;
  else if (name == "vf") p.v_f = value;
  else if (name == "radius") p.radius = static_cast<int>(std::lround(value));
  else {
    throw std::invalid_argument("unknown sweep parameter '" + name +
                                "' (expected alpha-f, alpha-l, alpha-e, beta, ve, vl, vf, radius)");
  }
}

int cmd_sweep(const SweepOpts& s) {
  if (s.steps < 2) throw std::invalid_argument("--steps must be at least 2");
  if (s.from > s.to) throw std::invalid_argument("--from must not exceed --to");
  {
    pcnn::PcnnParams probe = resolve_params(s.base);
    apply_sweep_value(probe, s.param, s.from);  // reject unknown names before any work
  }

  const pcnn::GrayImage image = pcnn::load_pgm(s.base.input);
  const pcnn::Variant variant = pcnn::variant_from_string(s.base.variant);
  const fs::path dir = ensure_out_dir(s.base.out);

  std::vector<double> values(static_cast<std::size_t>(s.steps));
  for (int i = 0; i < s.steps; ++i) {
    values[static_cast<std::size_t>(i)] =
        s.from + (s.to - s.from) * static_cast<double>(i) / static_cast<double>(s.steps - 1);
  }

  struct Row {
    double value;
    long long total_fired;
    double min_cross_entropy;
  };
  std::vector<Row> rows(values.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto work = [&]() {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= values.size()) break;
      try {
        CommonOpts o = s.base;
        pcnn::PcnnParams params = resolve_params(o);
        apply_sweep_value(params, s.param, values[i]);
        pcnn::validate(params);

        char sub[32];
        std::snprintf(sub, sizeof sub, "val_%03zu", i);
        const fs::path subdir = dir / sub;
        std::error_code ec;
        fs::create_directories(subdir, ec);
        if (ec) throw pcnn::IoError("cannot create '" + subdir.string() + "'");

        const pcnn::PulseSequence seq = pcnn::run(image, params, variant, params.iters);
        pcnn::write_sequence(seq, subdir);
        pcnn::write_file(subdir / "config.txt",
                         config_text("sweep", o, params,
                                     {"sweep_param = " + s.param,
                                      "sweep_value = " + format_double(values[i])}));

        long long fired = 0;
        for (int c : pcnn::time_signature(seq)) fired += c;
        const pcnn::SegmentationResult seg = pcnn::segment_sequence(image, seq);
        rows[i] = Row{values[i], fired,
                      seg.cross_entropy_curve[static_cast<std::size_t>(seg.chosen_iteration) - 1]};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };

  const int workers = worker_count(values.size());
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::string csv = "value,total_fired,min_cross_entropy\n";
  for (const Row& row : rows) {
    csv += format_double(row.value) + "," + std::to_string(row.total_fired) + "," +
           format_double(row.min_cross_entropy) + "\n";
  }
  pcnn::write_file(dir / "sweep.csv", csv);
  return 0;
}

int cmd_presets() {
  std::fputs(pcnn::serialize_presets(pcnn::preset_catalog()).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pcnn: pulse-coupled neural network simulation on grayscale images.\n"
      "\n"
      "Defaults baked into the library:\n"
      "  - intensities are normalized into [0.001, 1] (floor 1e-3, so every\n"
      "    neuron eventually fires)\n"
      "  - the alpha_f auto rule is ln(1/sigma) with a natural logarithm\n"
      "  - the alpha_e auto rule is C/mean with C defaulting to 10\n"
      "  - denoise flags fire-time outliers beyond tau = 2 by default\n"};
  app.require_subcommand(1);

  CommonOpts run_opts, seg_opts, edge_opts, sig_opts, den_opts;
  SweepOpts sweep_opts;
  int tau = 2;

  CLI::App* c_run = app.add_subcommand("run", "Run the network and write all pulse frames");
  add_common_flags(*c_run, run_opts);

  CLI::App* c_segment = app.add_subcommand(
      "segment", "Cross-entropy-selected segmentation (writes mask.pgm and curve.csv)");
  add_common_flags(*c_segment, seg_opts);

  CLI::App* c_edges = app.add_subcommand("edges", "Fire-time edge map (writes edges.pgm)");
  add_common_flags(*c_edges, edge_opts);

  CLI::App* c_denoise = app.add_subcommand(
      "denoise", "Pulse-timing-guided impulse denoising (writes denoised.pgm, candidates.pgm)");
  add_common_flags(*c_denoise, den_opts);
  c_denoise->add_option("--tau", tau, "Fire-time deviation threshold for noise candidates")
      ->capture_default_str();

  CLI::App* c_signature = app.add_subcommand("signature",
                                             "Run the network and write only signature.csv");
  add_common_flags(*c_signature, sig_opts);

  CLI::App* c_sweep = app.add_subcommand(
      "sweep", "Run evenly spaced values of one parameter (PCNN_THREADS caps parallelism)");
  add_common_flags(*c_sweep, sweep_opts.base);
  c_sweep->add_option("--param", sweep_opts.param,
                      "Parameter to sweep: alpha-f, alpha-l, alpha-e, beta, ve, vl, vf, radius")
      ->required();
  c_sweep->add_option("--from", sweep_opts.from, "First value")->required();
  c_sweep->add_option("--to", sweep_opts.to, "Last value")->required();
  c_sweep->add_option("--steps", sweep_opts.steps, "Number of evenly spaced values (>= 2)")
      ->required();

  CLI::App* c_presets = app.add_subcommand("presets", "Print the preset catalog (key=value)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_run->parsed()) return cmd_run(run_opts);
    if (c_segment->parsed()) return cmd_segment(seg_opts);
    if (c_edges->parsed()) return cmd_edges(edge_opts);
    if (c_denoise->parsed()) return cmd_denoise(den_opts, tau);
    if (c_signature->parsed()) return cmd_signature(sig_opts);
    if (c_sweep->parsed()) return cmd_sweep(sweep_opts);
    if (c_presets->parsed()) return cmd_presets();
  } catch (const pcnn::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const pcnn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const pcnn::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const pcnn::NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
