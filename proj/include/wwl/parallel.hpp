// Thread-count control (WWL_THREADS env var) and a trivial parallel loop.
#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wwl {

inline int max_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("WWL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  const int nt = max_threads();
  std::exception_ptr first_error = nullptr;
#pragma omp parallel num_threads(nt)
  {
#pragma omp for schedule(static)
    for (long long i = 0; i < (long long)n; ++i) {
      try {
        fn((std::size_t)i);
      } catch (...) {
#pragma omp critical(wwl_parallel_err)
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace wwl
