#pragma once

#include <cstddef>
#include <functional>

namespace slevir {

// Worker count: SLEVIR_THREADS if set and positive, else hardware concurrency (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to `threads` workers (0 means thread_count()).
// Index ranges are split statically so callers that store per-index results
// and reduce them in index order get identical output for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

} // namespace slevir
