#include "pmp/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pmp::exec {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load(std::memory_order_relaxed) && omp_get_max_threads() > 1;
#else
    return false;
#endif
}

void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

}  // namespace pmp::exec
