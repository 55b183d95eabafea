#pragma once

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rellich {

// Selects between the serial reference path and the OpenMP path of a
// kernel. Results are bit-identical: every item is computed independently
// into its own slot and merged in a fixed order.
enum class Execution { serial, parallel };

namespace detail {

// Runs fn(i) for i in [0, count). The parallel path re-throws the first
// exception captured on a worker thread.
template <typename Fn>
void run_indexed(int count, Execution exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Execution::parallel) {
        std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                fn(i);
            } catch (...) {
#pragma omp critical(rellich_run_indexed_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)exec;
#endif
    for (int i = 0; i < count; ++i) fn(i);
}

} // namespace detail
} // namespace rellich
