#pragma once
#include <cstddef>

#ifdef ENGINE_HAVE_OPENMP
#include <omp.h>
#endif

namespace conic {

// Runs f(i) for i in [0,n). Each iteration must write only its own slot;
// under that contract the parallel result is bit-identical to serial_for.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef ENGINE_HAVE_OPENMP
    #pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) f(i);
#endif
}

// Reference path kept so tests and the benchmark can compare against the
// parallel one.
template <class F>
void serial_for(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace conic
