#pragma once

#include <stdexcept>
#include <string>

namespace xyq {

/// Thrown when a computation trips a numerical safeguard (grid too coarse,
/// divergent critical time, non-quantized winding, ...).  Distinct from
/// std::invalid_argument so callers can map the two to different exit codes.
class numerical_guard_error : public std::runtime_error {
 public:
  explicit numerical_guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyq
