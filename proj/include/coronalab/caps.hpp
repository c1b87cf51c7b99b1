#pragma once

#include <cstddef>
#include <string>

#include "coronalab/errors.hpp"

namespace coronalab {

/// Order limits for the exact solvers. Every solver refuses instances above
/// its cap with a SizeLimitError instead of running unbounded.
struct Caps {
  std::size_t coloring = 64;   // chromatic and distance-k chromatic
  std::size_t subset = 20;     // domination-type set parameters
  std::size_t partition = 14;  // domatic / idomatic
  std::size_t roman = 14;      // Roman domination incl. b2max enumeration
};

inline void require_cap(const char* solver, std::size_t order, std::size_t cap) {
  if (order > cap) throw SizeLimitError(solver, order, cap);
}

}  // namespace coronalab
