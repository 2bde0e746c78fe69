#pragma once
//
// OpenMP reduction over an index range. Every kernel that enumerates
// candidates goes through reduce_range, so the serial path is the
// reference the parallel one is tested against.
//

#include <algorithm>
#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rspec {

enum class Execution { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Runs body(state, i) for i in [0, count). Each thread owns one contiguous
// block and visits it in increasing order; the per-thread states are then
// folded left to right with merge(into, from). With a merge that keeps the
// first occurrence, results are identical to the serial path.
template <typename State, typename Body, typename Merge>
State reduce_range(std::uint64_t count, Execution exec, Body&& body, Merge&& merge) {
  if (exec == Execution::serial || max_threads() == 1) {
    State state{};
    for (std::uint64_t i = 0; i < count; ++i) body(state, i);
    return state;
  }

  const int requested = max_threads();
  std::vector<State> states(static_cast<std::size_t>(requested));
  std::exception_ptr error;
#pragma omp parallel num_threads(requested)
  {
#ifdef _OPENMP
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto n = static_cast<std::uint64_t>(omp_get_num_threads());
#else
    const std::uint64_t t = 0, n = 1;
#endif
    const std::uint64_t begin = count / n * t + std::min(t, count % n);
    const std::uint64_t end = begin + count / n + (t < count % n ? 1 : 0);
    try {
      for (std::uint64_t i = begin; i < end; ++i) body(states[t], i);
    } catch (...) {
#pragma omp critical(rspec_reduce_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  State total = std::move(states[0]);
  for (std::size_t t = 1; t < states.size(); ++t) merge(total, std::move(states[t]));
  return total;
}

}  // namespace rspec
