#include "edss/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace edss {

unsigned thread_cap() {
  if (const char* env = std::getenv("EDSS_MARKOV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned workers = thread_cap();
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  // Modest grain so uneven per-index work still balances.
  std::size_t grain = n / (static_cast<std::size_t>(workers) * 8) + 1;

  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        std::size_t begin = cursor.fetch_add(grain);
        if (begin >= n) break;
        std::size_t end = begin + grain < n ? begin + grain : n;
        try {
          for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          bool expected = false;
          if (failed.compare_exchange_strong(expected, true)) {
            first_error = std::current_exception();
          }
          break;
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace edss
