#pragma once

#include <stdexcept>
#include <string>

namespace hocalc {

// Malformed input: bad shapes, non-monotone maps, invalid attachments,
// malformed fixtures. The CLI maps this to exit code 3.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested computation exceeds the configured desk-scale bounds.
class BoundError : public std::length_error {
 public:
  explicit BoundError(const std::string& what) : std::length_error(what) {}
};

}  // namespace hocalc
