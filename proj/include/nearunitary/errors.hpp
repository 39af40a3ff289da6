#pragma once

#include <stdexcept>
#include <string>

namespace nearunitary {

// Input validation failures (bad N, malformed cycle text, size mismatch...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quadrature or extrapolation failed to reach the requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, double estimate)
      : std::runtime_error(msg), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// An internal invariant failed (non-invariant cluster, parity mismatch...).
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nearunitary
