#pragma once

#include <cstddef>
#include <functional>

namespace cochar {

// Worker count: set_thread_count() if called with n > 0, else the
// COCHAR_THREADS environment variable, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(i) for i in [0, n). Callers write results into per-index slots and
// merge them in index order, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cochar
