#pragma once

#include <cstddef>
#include <functional>

namespace prozd {

// Worker cap: min(hardware threads, PROZD_THREADS if set). Always >= 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker; callers are responsible for writing to disjoint output slots so the
// result is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace prozd
