#pragma once

#include <cstddef>
#include <functional>

namespace holonomy {

/// Worker count: HOLONOMY_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end, worker) on
/// up to worker_count() threads. Chunks are handed out in order; the first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t chunk,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace holonomy
