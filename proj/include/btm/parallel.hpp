#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace btm::par {

// Applies the BTM_DISAGG_THREADS cap (if set) to the OpenMP runtime.
// Called once by entry points; a no-op in serial builds.
void apply_env_thread_cap();

int max_threads();

// parallel_for(n, f) runs f(i) for i in [0, n). Every iteration must write to
// its own output slot; kernels built on this are bit-deterministic for any
// thread count.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#endif
}

} // namespace btm::par
