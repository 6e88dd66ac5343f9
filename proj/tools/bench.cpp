// Compares the OpenMP kernels against their serial references: the
// permutation-sum kernel on single coefficients, a whole-degree sweep
// parallelized across coefficients, and the hook-rule enumeration.

#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "kroncoeff/contingency.hpp"
#include "kroncoeff/hooks.hpp"
#include "kroncoeff/kron.hpp"
#include "kroncoeff/partition.hpp"

using namespace kroncoeff;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
    struct Triple {
        Partition a, b, c;
    };
    const std::vector<Triple> triples = {
        {Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{3, 2, 1}},
        {Partition{4, 3, 2, 1}, Partition{4, 3, 2, 1}, Partition{4, 3, 2, 1}},
        {Partition{2, 2, 1, 1, 1}, Partition{3, 2, 1, 1}, Partition{2, 2, 2, 1}},
        {Partition{5, 4, 3, 2}, Partition{5, 4, 3, 2}, Partition{7, 4, 2, 1}},
    };

    std::printf("single coefficients (reference = unaggregated serial sum)\n");
    std::printf("%-34s %12s %10s %10s\n", "triple", "g", "serial[s]", "kernel[s]");
    for (const Triple& t : triples) {
        global_table_counter().clear();
        auto start = std::chrono::steady_clock::now();
        const BigCount serial = kron_via_tables_reference(t.a, t.b, t.c);
        const double ts = seconds(start);

        global_table_counter().clear();
        start = std::chrono::steady_clock::now();
        const BigCount parallel = kron_via_tables(t.a, t.b, t.c);
        const double tp = seconds(start);

        const std::string label = t.a.str() + " | " + t.b.str() + " | " + t.c.str();
        std::printf("%-34s %12s %10.3f %10.3f%s\n", label.c_str(), parallel.get_str().c_str(),
                    ts, tp, serial == parallel ? "" : "  MISMATCH");
    }

    // the bread-and-butter workload: every coefficient of one degree
    const int sweep_n = 7;
    const auto parts = partitions_of(sweep_n);
    std::vector<Triple> sweep;
    for (const Partition& a : parts) {
        for (const Partition& b : parts) {
            for (const Partition& c : parts) sweep.push_back({a, b, c});
        }
    }
    std::printf("\nsweep of all %zu triples with n = %d\n", sweep.size(), sweep_n);

    global_table_counter().clear();
    auto start = std::chrono::steady_clock::now();
    BigCount checksum_serial = 0;
    for (const Triple& t : sweep) checksum_serial += kron_via_tables(t.a, t.b, t.c);
    const double sweep_serial = seconds(start);

    global_table_counter().clear();
    start = std::chrono::steady_clock::now();
    BigCount checksum_parallel = 0;
#pragma omp parallel
    {
        BigCount local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(sweep.size()); ++i) {
            local += kron_via_tables(sweep[static_cast<size_t>(i)].a,
                                     sweep[static_cast<size_t>(i)].b,
                                     sweep[static_cast<size_t>(i)].c);
        }
#pragma omp critical(bench_sweep)
        checksum_parallel += local;
    }
    const double sweep_parallel = seconds(start);
    std::printf("checksum %s serial %.3fs, %d threads %.3fs%s\n",
                checksum_parallel.get_str().c_str(), sweep_serial, omp_get_max_threads(),
                sweep_parallel, checksum_serial == checksum_parallel ? "" : "  MISMATCH");

    const Partition lam{6, 5, 4, 3};
    const Partition mu{5, 4, 4, 3, 2};
    std::printf("\nhook rule lambda=%s mu=%s\n", lam.str().c_str(), mu.str().c_str());
    std::printf("%3s %10s %12s %12s\n", "k", "count", "1 thread[s]", "all[s]");
    const int max_threads = omp_get_max_threads();
    for (int k = 4; k <= 8; ++k) {
        omp_set_num_threads(1);
        auto t0 = std::chrono::steady_clock::now();
        const BigCount one = count_hook_kron(lam, mu, k);
        const double t1 = seconds(t0);

        omp_set_num_threads(max_threads);
        t0 = std::chrono::steady_clock::now();
        const BigCount all = count_hook_kron(lam, mu, k);
        const double ta = seconds(t0);
        std::printf("%3d %10s %12.3f %12.3f%s\n", k, all.get_str().c_str(), t1, ta,
                    one == all ? "" : "  MISMATCH");
    }
    return 0;
}
