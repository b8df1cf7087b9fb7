#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace niche::par {

// Reductions are chunked: fixed-size chunk partials are combined in chunk
// order, so a sum is bitwise identical for every thread count (including 1).
inline constexpr std::size_t kChunk = 1024;

template <class F>
double sum(std::size_t n, F&& term) {
  if (n == 0) return 0.0;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

// Elementwise-independent loop; every output index is owned by one iteration.
template <class F>
void for_each(std::size_t n, F&& body) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(static_cast<std::size_t>(i));
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline double wtime() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return 0.0;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace niche::par
