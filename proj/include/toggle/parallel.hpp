#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace toggle {

// Evaluates f(0..n-1) and returns the results in index order. The serial
// version is the reference the parallel one is tested against.
template <class F>
auto serial_map(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

// OpenMP version; the first exception thrown by any task is rethrown after
// the loop. Results do not depend on `jobs`.
template <class F>
auto parallel_map(std::size_t n, int jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  if (jobs <= 1 || n <= 1) return serial_map(n, f);
  std::vector<std::vector<R>> slots(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      slots[static_cast<std::size_t>(i)].push_back(f(static_cast<std::size_t>(i)));
    } catch (...) {
#pragma omp critical(toggle_parallel_map)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(s.front()));
  return out;
}

}  // namespace toggle
