#include "popa/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace popa {

int thread_count() {
    static const int count = [] {
#ifdef _OPENMP
        int t = omp_get_max_threads();
#else
        int t = 1;
#endif
        if (const char* env = std::getenv("POPA_THREADS")) {
            try {
                t = std::stoi(env);
            } catch (...) {
                t = 1;
            }
        }
        return t < 1 ? 1 : t;
    }();
    return count;
}

}  // namespace popa
