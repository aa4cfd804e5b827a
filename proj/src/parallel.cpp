#include "cluster_forge/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace cf {

int thread_count() {
    if (const char* env = std::getenv("CLUSTER_FORGE_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return omp_get_max_threads();
}

}  // namespace cf
