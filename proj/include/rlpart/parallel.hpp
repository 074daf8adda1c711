#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Deterministic parallel search helpers. With one worker (or when already
// inside a parallel region) every helper runs the plain serial loop, which is
// the reference behaviour the parallel path must reproduce exactly.
namespace rlpart::par {

int threads();
void set_threads(int n);
// Applies RLPART_THREADS if set; returns the resulting worker count.
int configure_from_env();
bool serial_now();

// Smallest index i in [0, count) for which f(i) returns a value.
template <class T, class F>
std::optional<std::pair<std::size_t, T>> first_success(std::size_t count, F&& f) {
  if (serial_now()) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto r = f(i)) return std::make_pair(i, std::move(*r));
    return std::nullopt;
  }
  const std::size_t block = static_cast<std::size_t>(threads()) * 8;
  std::vector<std::optional<T>> slot(block);
  for (std::size_t base = 0; base < count; base += block) {
    std::size_t len = std::min(block, count - base);
    for (auto& s : slot) s.reset();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads())
    for (long long j = 0; j < static_cast<long long>(len); ++j) slot[j] = f(base + j);
    for (std::size_t j = 0; j < len; ++j)
      if (slot[j]) return std::make_pair(base + j, std::move(*slot[j]));
  }
  return std::nullopt;
}

// Evaluates f on every index and returns the results in index order.
template <class T, class F>
std::vector<T> map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  if (serial_now()) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads())
  for (long long i = 0; i < static_cast<long long>(count); ++i) out[i] = f(i);
  return out;
}

}  // namespace rlpart::par
