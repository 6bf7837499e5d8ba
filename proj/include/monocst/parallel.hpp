#pragma once

#include <cstddef>
#include <functional>

namespace monocst {

// Worker count: hardware concurrency capped by MONOCST_THREADS (>= 1).
unsigned worker_count();

// Runs body(i) for i in [0, n) over contiguous chunks. Each index is visited
// exactly once; callers write only to slot i, so results do not depend on the
// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace monocst
