#pragma once

#include <cstddef>
#include <functional>

#include "hdglab/types.hpp"

namespace hdglab {

struct SingularValueBounds {
  double sigma_min = 0.0;
  double sigma_max = 0.0;

  /// sigma_min / sigma_max, or 0 for a zero matrix.
  double normalized() const { return sigma_max > 0.0 ? sigma_min / sigma_max : 0.0; }
};

/// Extreme singular values from a full dense SVD.
SingularValueBounds extreme_singular_values(const CMatrix &a);

/// Runs body(i) for i in [0, n) on up to `threads` worker threads
/// (0 = hardware concurrency). Exceptions from workers are rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &body);

} // namespace hdglab
