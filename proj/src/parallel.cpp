#include "btm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace btm::par {

void apply_env_thread_cap() {
#ifdef _OPENMP
    if (const char* v = std::getenv("BTM_DISAGG_THREADS")) {
        int cap = std::atoi(v);
        if (cap >= 1 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    }
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace btm::par
