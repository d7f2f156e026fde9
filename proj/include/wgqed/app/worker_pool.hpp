#pragma once

#include <cstddef>
#include <functional>

namespace wgqed::app {

// WGQED_THREADS if set to a positive integer, otherwise the hardware concurrency.
unsigned default_thread_count();

// Runs fn(0..n-1) on up to `threads` workers. Results must be written by index,
// so the output order never depends on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = default_thread_count());

}  // namespace wgqed::app
