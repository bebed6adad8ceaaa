#include "pcnn/imgio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "pcnn/errors.hpp"
#include "pcnn/text.hpp"

namespace pcnn {

namespace {

bool is_pgm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

struct Cursor {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  bool done() const { return pos >= bytes.size(); }

  void skip_space_and_comments() {
    while (!done()) {
      if (is_pgm_space(bytes[pos])) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (!done() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::string token() {
    skip_space_and_comments();
    const std::size_t start = pos;
    while (!done() && !is_pgm_space(bytes[pos]) && bytes[pos] != '#') ++pos;
    if (pos == start) throw ParseError("unexpected end of header", start);
    return std::string(reinterpret_cast<const char*>(bytes.data()) + start, pos - start);
  }

  long number(const char* what) {
    const std::size_t at = pos;
    const std::string tok = token();
    long value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", at);
      }
      value = value * 10 + (c - '0');
      if (value > 1 << 30) throw ParseError(std::string(what) + " out of range", at);
    }
    return value;
  }
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  Cursor cur{bytes};
  const std::string magic = cur.token();
  if (magic != "P5") {
    throw ParseError("bad magic '" + magic + "', only binary PGM (P5) is supported", 0);
  }
  const long width = cur.number("width");
  const long height = cur.number("height");
  const std::size_t maxval_at = cur.pos;
  const long maxval = cur.number("maxval");
  if (width < 1 || height < 1) {
    throw ParseError("dimensions must be positive", maxval_at);
  }
  if (maxval < 1 || maxval > 255) {
    throw ParseError("maxval " + std::to_string(maxval) + " unsupported (must be 1..255)",
                     maxval_at);
  }
  // Exactly one whitespace byte separates the header from the payload.
  if (cur.done() || !is_pgm_space(bytes[cur.pos])) {
    throw ParseError("missing whitespace before payload", cur.pos);
  }
  ++cur.pos;

  const std::size_t expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t available = bytes.size() - cur.pos;
  if (available < expected) {
    throw ParseError("truncated payload: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(available),
                     cur.pos);
  }
  std::vector<double> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    values[i] = static_cast<double>(bytes[cur.pos + i]) / static_cast<double>(maxval);
  }
  return GrayImage::clamped(static_cast<int>(width), static_cast<int>(height), std::move(values));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", image.width, image.height);
  std::vector<std::uint8_t> out(header, header + n);
  out.reserve(out.size() + image.pixel_count());
  for (double v : image.data) {
    out.push_back(static_cast<std::uint8_t>(std::lround(v * 255.0)));
  }
  return out;
}

std::vector<std::uint8_t> write_pgm(const BinaryField& field) {
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", field.width, field.height);
  std::vector<std::uint8_t> out(header, header + n);
  out.reserve(out.size() + field.pixel_count());
  for (std::uint8_t v : field.data) out.push_back(v ? 255 : 0);
  return out;
}

GrayImage load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const GrayImage& image) {
  write_file(path, write_pgm(image));
}

void save_pgm(const std::filesystem::path& path, const BinaryField& field) {
  write_file(path, write_pgm(field));
}

std::vector<std::filesystem::path> write_sequence(const PulseSequence& seq,
                                                  const std::filesystem::path& directory) {
  std::error_code ec;
  if (!std::filesystem::is_directory(directory, ec)) {
    throw IoError("output directory '" + directory.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> written;
  written.reserve(seq.frames.size() + 1);
  for (std::size_t n = 0; n < seq.frames.size(); ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.pgm", n + 1);
    const std::filesystem::path path = directory / name;
    save_pgm(path, seq.frames[n]);
    written.push_back(path);
  }
  const std::filesystem::path csv = directory / "signature.csv";
  write_file(csv, signature_csv(seq));
  written.push_back(csv);
  return written;
}

std::string signature_csv(const PulseSequence& seq) {
  std::string out = "iteration,fired_count\n";
  const std::vector<int> counts = time_signature(seq);
  for (std::size_t n = 0; n < counts.size(); ++n) {
    out += std::to_string(n + 1) + "," + std::to_string(counts[n]) + "\n";
  }
  return out;
}

std::string curve_csv(const std::vector<double>& curve) {
  std::string out = "iteration,cross_entropy\n";
  for (std::size_t n = 0; n < curve.size(); ++n) {
    out += std::to_string(n + 1) + "," + format_double(curve[n]) + "\n";
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace pcnn
