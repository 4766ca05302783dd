#pragma once

#include <cstddef>
#include <functional>

namespace edss {

// Worker-thread cap: EDSS_MARKOV_THREADS when set (min 1), otherwise the
// hardware concurrency.  Results never depend on the value — parallel loops
// only write per-index slots.
unsigned thread_cap();

// Run fn(i) for i in [0, n) across at most thread_cap() threads.  fn must
// only touch state owned by index i; exceptions are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace edss
