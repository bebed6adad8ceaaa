#ifndef PCNN_IMGIO_HPP
#define PCNN_IMGIO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pcnn/image.hpp"
#include "pcnn/model.hpp"

namespace pcnn {

/// Parses binary 8-bit PGM (P5). Header tokens may be separated by any
/// whitespace and '#' comments; maxval above 255 is rejected. Intensities map
/// to v/maxval and are clamped into [kIntensityFloor, 1].
/// Throws ParseError (with byte offset) on malformed input.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Serializes as P5 with maxval 255, payload round(v*255).
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

/// Binary fields are written with 0 -> 0 and 1 -> 255 for viewer compatibility.
std::vector<std::uint8_t> write_pgm(const BinaryField& field);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& image);
void save_pgm(const std::filesystem::path& path, const BinaryField& field);

/// Writes frame_0001.pgm .. frame_NNNN.pgm plus signature.csv
/// (columns iteration,fired_count) into an existing writable directory.
/// Returns the files written, frames first. Throws IoError when the
/// directory is missing or not writable.
std::vector<std::filesystem::path> write_sequence(const PulseSequence& seq,
                                                  const std::filesystem::path& directory);

/// CSV text "iteration,fired_count" for a pulse sequence. LF line endings.
std::string signature_csv(const PulseSequence& seq);

/// CSV text "iteration,cross_entropy" for a segmentation curve.
std::string curve_csv(const std::vector<double>& curve);

/// Reads a whole file; throws IoError on failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes a whole file; throws IoError on failure.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pcnn

#endif  // PCNN_IMGIO_HPP
