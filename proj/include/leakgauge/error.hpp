#pragma once

#include <stdexcept>
#include <string>

namespace leakgauge {

// Raised when input data violates a documented contract: malformed files,
// mismatched series lengths, degenerate values. Bad call parameters use
// std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leakgauge
