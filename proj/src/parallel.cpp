#include "semigibbs/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace semigibbs::par {

namespace {
int g_threads = 0;  // 0: not set explicitly
}

int thread_count() {
    if (g_threads > 0) return g_threads;
    if (const char* env = std::getenv("SEMIGIBBS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

void set_thread_count(int n) {
    g_threads = n;
    if (n > 0) omp_set_num_threads(n);
}

}  // namespace semigibbs::par
