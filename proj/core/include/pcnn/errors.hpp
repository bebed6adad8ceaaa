#ifndef PCNN_ERRORS_HPP
#define PCNN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcnn {

/// Thrown when a simulation state picks up a NaN or infinity. The message
/// names the first offending field and step.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input bytes (PGM headers, preset files). Carries the byte
/// offset at which parsing gave up.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Filesystem-level failure (missing directory, unwritable file, ...).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a name that is not in a catalog.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcnn

#endif  // PCNN_ERRORS_HPP
