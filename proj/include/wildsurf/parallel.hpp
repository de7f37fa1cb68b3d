#ifndef WILDSURF_PARALLEL_HPP
#define WILDSURF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wildsurf {

// Worker count: WILDSURF_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads. Items are
// handed out in increasing order; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace wildsurf

#endif  // WILDSURF_PARALLEL_HPP
