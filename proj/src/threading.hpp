#pragma once

#include <functional>

namespace homs {

// Worker count for parallel sections: HYBRIDOMS_THREADS when set to a
// positive integer, otherwise (or when 0) the hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) across worker_count() threads in contiguous
// chunks. max_workers > 0 caps the thread count below worker_count (for
// memory-heavy work items). Exceptions from workers are rethrown on the
// calling thread (the first one wins). fn must be safe to call concurrently
// for distinct i.
void parallel_for(int n, const std::function<void(int)>& fn,
                  int max_workers = 0);

}  // namespace homs
