#pragma once

#include <cstddef>
#include <functional>

namespace tropkit {

// Hardware concurrency, capped by the TROPKIT_THREADS environment variable.
std::size_t worker_count();

// Runs fn(0) .. fn(n-1) on up to worker_count() threads. The first exception
// thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tropkit
