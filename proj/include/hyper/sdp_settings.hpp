#pragma once

#include <cstdint>

namespace hyper {

/// Knobs for the numerical Gram-matrix search and the rational rounding
/// that turns its output into an exact certificate.
struct SdpSettings {
  unsigned max_iterations = 6000;
  double feasibility_tolerance = 1e-9;
  /// Initial denominator bound for rounding; escalated x16 up to three times.
  long rounding_denominator_bound = 1L << 12;
  std::uint64_t random_seed = 42;
};

}  // namespace hyper
