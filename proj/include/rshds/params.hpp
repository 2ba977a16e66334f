#pragma once

#include <cstdint>

namespace rshds {

/// Parameters of a relative skew Hadamard difference set group with |H| = h.
struct ParameterSet {
  std::int64_t h = 0;
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t m = 0;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// (v, k, lambda) = (h^2, h(h-1)/2, h(h-2)/4), m = 0. Requires h even, h >= 2.
ParameterSet parameterFormulas(std::int64_t h);

/// Largest admissible number m of H-cosets in D and D^{-1}: floor((h-1)/4).
std::int64_t mBound(std::int64_t h);

}  // namespace rshds
