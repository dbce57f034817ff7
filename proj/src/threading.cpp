#include "threading.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace homs {

int worker_count() {
  int hw = int(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("HYBRIDOMS_THREADS");
  if (!env || !*env) return hw;
  try {
    int v = std::stoi(env);
    if (v > 0) return v;
  } catch (...) {
  }
  return hw;
}

void parallel_for(int n, const std::function<void(int)>& fn,
                  int max_workers) {
  if (n <= 0) return;
  int workers = std::min(worker_count(), n);
  if (max_workers > 0) workers = std::min(workers, max_workers);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = w * chunk;
    int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace homs
