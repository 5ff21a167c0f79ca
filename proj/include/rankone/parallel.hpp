#pragma once

#include <cstddef>
#include <functional>

namespace rankone {

// Worker count: RANKONE_GAP_THREADS if set and positive, else hardware
// concurrency (at least 1).
unsigned default_worker_count();

// Calls body(i) for i in [0, n) on up to `workers` threads (0 = default).
// Each index is visited exactly once; callers write results by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned workers = 0);

}  // namespace rankone
