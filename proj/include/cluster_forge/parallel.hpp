#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace cf {

enum class Exec { Serial, Parallel };

// CLUSTER_FORGE_THREADS if set and positive, else the OpenMP default
int thread_count();

template <class F>
void parallel_for(std::size_t count, F&& body, Exec mode = Exec::Parallel) {
    if (mode == Exec::Serial || count < 2 || thread_count() < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
    long n = long(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < n; ++i) {
        try {
            body(std::size_t(i));
        } catch (...) {
            std::lock_guard<std::mutex> lk(m);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace cf
