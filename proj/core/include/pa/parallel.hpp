#pragma once

#include <cstddef>
#include <functional>

namespace pa {

// Worker count from PA_THREADS (0 or unset = hardware concurrency).
unsigned thread_count();

// Runs fn(i) for i in [0, count) over up to thread_count() threads.
// fn must only write to per-index state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn);

} // namespace pa
