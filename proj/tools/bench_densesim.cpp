// Benchmark: OpenMP structured-trace outcome enumeration vs the serial
// Kronecker-product reference, over a range of qubit counts.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "clifftomo/oracle.hpp"

using namespace clifftomo;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t max_n = (argc > 1) ? std::strtoul(argv[1], nullptr, 10) : 5;
    if (max_n < 1 || max_n > kDenseQubitLimit) {
        std::fprintf(stderr, "usage: bench_densesim [max_n<=%zu]\n", kDenseQubitLimit);
        return 2;
    }

    std::printf("threads=%d\n", omp_get_max_threads());
    std::printf("%3s  %12s  %12s  %8s  %10s\n", "n", "fast (ms)", "ref (ms)", "speedup",
                "max |diff|");

    CtrRng rng(1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        CliffordTableau t = random_clifford(n, rng);
        auto [oracle, u] = make_perturbed_clifford(t, 0.2, rng);
        F2Vec j(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i) j.set(i, rng.next_bit());

        OutcomeDist fast = twin_u_distribution(u, j);
        OutcomeDist ref = twin_u_distribution_reference(u, j);
        double diff = 0;
        for (std::size_t k = 0; k < fast.size(); ++k)
            diff = std::max(diff, std::abs(fast.prob(k) - ref.prob(k)));

        int reps = (n <= 3) ? 20 : 3;
        double fast_ms = time_ms([&] { twin_u_distribution(u, j); }, reps);
        double ref_ms = time_ms([&] { twin_u_distribution_reference(u, j); }, reps);
        std::printf("%3zu  %12.3f  %12.3f  %8.2f  %10.2e\n", n, fast_ms, ref_ms,
                    ref_ms / fast_ms, diff);
        if (diff > 1e-9) {
            std::fprintf(stderr, "kernel mismatch at n=%zu\n", n);
            return 1;
        }
    }
    return 0;
}
