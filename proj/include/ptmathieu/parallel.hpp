#pragma once

#include <cstddef>
#include <functional>

namespace ptmathieu {

/// Worker count from PTMATHIEU_WORKERS, falling back to 1.
int default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Results must
/// be written to per-index slots by the caller; the first exception thrown by
/// any body is rethrown after all workers join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

} // namespace ptmathieu
