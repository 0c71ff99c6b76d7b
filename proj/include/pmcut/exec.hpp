#pragma once

#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pmcut {

// Execution policy for the enumeration kernels. Results are identical either
// way; parallel only changes who computes which cut mask.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Index-parallel loop with exception capture (exceptions must not unwind out
// of an OpenMP region). fn(i) must write only to state owned by index i.
template <typename Fn>
void parallel_for(std::int64_t count, Exec exec, Fn&& fn) {
    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pmcut_parallel_for_error)
#endif
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace pmcut
