#pragma once

#include <stdexcept>
#include <string>

namespace netthermo {

// Input rejected by a precondition (N < 2, K = 0, non-positive occupation, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Exact big-integer arithmetic was asked for beyond the configured size cap.
// Callers should fall back to the log-domain routines or the sampler.
class CapExceededError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

} // namespace netthermo
