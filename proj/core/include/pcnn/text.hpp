#ifndef PCNN_TEXT_HPP
#define PCNN_TEXT_HPP

#include <string>

namespace pcnn {

/// Shortest decimal representation that parses back to exactly the same
/// double. Deterministic, used by every text artifact the library emits.
std::string format_double(double v);

}  // namespace pcnn

#endif  // PCNN_TEXT_HPP
