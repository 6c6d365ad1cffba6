#include "ramsey/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

namespace {
std::atomic<int> g_max_threads{0};
}

int max_threads() {
#ifdef _OPENMP
    int t = g_max_threads.load();
    return t > 0 ? t : omp_get_max_threads();
#else
    return 1;
#endif
}

void set_max_threads(int threads) { g_max_threads.store(threads); }

int threads_for(long work_items) {
    int t = max_threads();
    if (work_items < 2) return 1;
    if (work_items < t) return static_cast<int>(work_items);
    return t;
}

} // namespace ramsey
