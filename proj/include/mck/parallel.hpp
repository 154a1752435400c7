#ifndef MCK_PARALLEL_HPP_
#define MCK_PARALLEL_HPP_

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mck {

// Worker cap: MCKEAN_THREADS if set, else hardware concurrency.
inline int max_threads() {
  if (const char* env = std::getenv("MCKEAN_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(0..count-1) on up to max_threads() workers. Tasks must write only
// to their own slots; results are then independent of scheduling order.
// The first exception is rethrown after all workers join.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(count, max_threads());
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mck

#endif  // MCK_PARALLEL_HPP_
