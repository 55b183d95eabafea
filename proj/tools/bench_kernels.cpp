// Times the OpenMP kernels against their serial reference paths and
// checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rellich/constants.hpp"
#include "rellich/log_remainder.hpp"
#include "rellich/quotient.hpp"
#include "rellich/sturm_liouville.hpp"

using namespace rellich;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "results identical" : "RESULTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, %d threads\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n\n");
#endif

    {
        Spectrum a, b;
        double ts = time_ms([&] { a = cap_spectrum_numeric(3, 2.2, 24, 6, {3000}, Execution::serial); });
        double tp = time_ms([&] { b = cap_spectrum_numeric(3, 2.2, 24, 6, {3000}, Execution::parallel); });
        bool same = a.entries.size() == b.entries.size();
        for (std::size_t i = 0; same && i < a.entries.size(); ++i)
            same = a.entries[i].value == b.entries[i].value;
        report("cap spectrum (24 modes)", ts, tp, same);
    }

    {
        SweepSpec spec;
        spec.target = SweepSpec::Target::WholeSpace;
        spec.n = 2;
        spec.from = -200.0;
        spec.to = 200.0;
        spec.step = 1e-4;
        SweepTable a, b;
        double ts = time_ms([&] { a = sweep(spec, Execution::serial); });
        double tp = time_ms([&] { b = sweep(spec, Execution::parallel); });
        bool same = a.values == b.values;
        report("constant sweep (4M points)", ts, tp, same);
    }

    {
        Spectrum sphere = full_sphere_spectrum(3, 6);
        ProblemSpec problem{ConeGeometry::full_sphere(3), 0.0, BoundaryCondition::Mixed,
                            DomainKind::IntersectBall};
        std::vector<RemainderReport> a, b;
        double ts = time_ms([&] {
            a = run_verify_manifest(problem, sphere, 400, 42, Execution::serial);
        });
        double tp = time_ms([&] {
            b = run_verify_manifest(problem, sphere, 400, 42, Execution::parallel);
        });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].slack == b[i].slack;
        report("verify manifest (400)", ts, tp, same);
    }

    {
        ConeGeometry cap = ConeGeometry::cap(3, 2.0);
        QuotientResult a, b;
        double ts = time_ms([&] { a = m_dirichlet_discrete(cap, -0.75, 1500, 12, 1, Execution::serial); });
        double tp = time_ms([&] { b = m_dirichlet_discrete(cap, -0.75, 1500, 12, 1, Execution::parallel); });
        report("clamped quotient (12 modes)", ts, tp, a.value == b.value);
    }

    return 0;
}
