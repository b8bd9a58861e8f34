#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace toricg {

/// Worker count: TORICG_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned thread_count();

/// Runs task(0..count-1) on up to thread_count() workers. Results are
/// returned in index order, so output does not depend on scheduling. The
/// first exception thrown by a task is rethrown after all workers join.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& task);

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& task) {
  std::vector<R> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = task(i); });
  return out;
}

}  // namespace toricg
