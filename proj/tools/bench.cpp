// Benchmark comparing the serial reference kernels against the OpenMP
// variants, plus batch factor+verify throughput across a random corpus.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "mfact/factorization.hpp"
#include "mfact/kernels.hpp"
#include "mfact/verification.hpp"

using namespace mfact;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

void bench_kernels(int n, int reps) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::vector<double> a(static_cast<std::size_t>(n) * n), b(a.size()), c(a.size());
    for (auto& v : a) v = entry(rng);
    for (auto& v : b) v = entry(rng);

    const double ts = time_best_of(reps, [&] { kernels::matmul_serial(a.data(), b.data(), c.data(), n); });
    const double tp = time_best_of(reps, [&] { kernels::matmul_parallel(a.data(), b.data(), c.data(), n); });
    std::printf("matmul   n=%5d  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx\n",
                n, ts * 1e3, tp * 1e3, ts / tp);

    std::vector<std::uint8_t> seed(static_cast<std::size_t>(n) * n, 0);
    std::bernoulli_distribution edge(3.0 / n);
    for (int i = 0; i < n; ++i) {
        seed[static_cast<std::size_t>(i) * n + i] = 1;
        for (int j = 0; j < n; ++j)
            if (edge(rng)) seed[static_cast<std::size_t>(i) * n + j] = 1;
    }
    std::vector<std::uint8_t> work;
    const double cs = time_best_of(reps, [&] {
        work = seed;
        kernels::closure_serial(work.data(), n);
    });
    const double cp = time_best_of(reps, [&] {
        work = seed;
        kernels::closure_parallel(work.data(), n);
    });
    std::printf("closure  n=%5d  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx\n",
                n, cs * 1e3, cp * 1e3, cs / cp);
}

MMatrix random_m(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> entry(0.0, 1.0);
    std::bernoulli_distribution fill(std::min(1.0, 4.0 / n));
    MMatrix p(n);
    std::vector<double> row_sum(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (fill(rng)) {
                p(i, j) = entry(rng);
                row_sum[i] += p(i, j);
            }
    double alpha = 0.0;
    for (int i = 0; i < n; ++i) alpha = std::max(alpha, row_sum[i]);
    MMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j ? alpha : 0.0) - p(i, j);
    return a;
}

void bench_batch(int count, int n) {
    std::mt19937_64 rng(7);
    std::vector<MMatrix> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) corpus.push_back(random_m(rng, n));

    auto run_one = [](const MMatrix& a) {
        const FactorizationResult r = factor_lu_spurs(a);
        return verify(a, r).overall ? 1 : 0;
    };

    int ok_serial = 0;
    const auto t0 = clock_type::now();
    for (const auto& a : corpus) ok_serial += run_one(a);
    const double ts = seconds_since(t0);

    int ok_parallel = 0;
    const auto t1 = clock_type::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : ok_parallel)
#endif
    for (int i = 0; i < count; ++i) ok_parallel += run_one(corpus[i]);
    const double tp = seconds_since(t1);

    std::printf("batch factor+verify  %d matrices n=%d  serial %7.3f s  parallel %7.3f s  "
                "speedup %.2fx  (pass %d/%d, %d)\n",
                count, n, ts, tp, ts / tp, ok_serial, count, ok_parallel);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    std::vector<int> sizes{128, 256, 512};
    int reps = 3, batch_count = 64, batch_n = 40;
    app.add_option("--sizes", sizes, "kernel sizes to time");
    app.add_option("--reps", reps, "repetitions (best-of)");
    app.add_option("--batch-count", batch_count, "matrices in the batch benchmark");
    app.add_option("--batch-n", batch_n, "order of the batch matrices");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel variants fall back to serial\n");
#endif
    for (int n : sizes) bench_kernels(n, reps);
    bench_batch(batch_count, batch_n);
    return 0;
}
