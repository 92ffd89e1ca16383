#include "mfact/kernels.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mfact::kernels {

namespace {
// The product is O(n^3) flops over O(n^2) data and parallelizes cleanly.
// The closure is O(n^3) byte ORs with a barrier per k step, so it only pays
// off once rows are long enough to amortize the synchronization.
constexpr int kMatmulParallelThreshold = 256;
constexpr int kClosureParallelThreshold = 2048;
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int matmul_parallel_threshold() { return kMatmulParallelThreshold; }
int closure_parallel_threshold() { return kClosureParallelThreshold; }

void matmul_serial(const double* a, const double* b, double* c, int n) {
    const std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < un; ++i) {
        double* ci = c + i * un;
        for (std::size_t j = 0; j < un; ++j) ci[j] = 0.0;
        for (std::size_t k = 0; k < un; ++k) {
            const double aik = a[i * un + k];
            if (aik == 0.0) continue;
            const double* bk = b + k * un;
            for (std::size_t j = 0; j < un; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matmul_parallel(const double* a, const double* b, double* c, int n) {
#ifdef _OPENMP
    const std::size_t un = static_cast<std::size_t>(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double* ci = c + static_cast<std::size_t>(i) * un;
        for (std::size_t j = 0; j < un; ++j) ci[j] = 0.0;
        for (std::size_t k = 0; k < un; ++k) {
            const double aik = a[static_cast<std::size_t>(i) * un + k];
            if (aik == 0.0) continue;
            const double* bk = b + k * un;
            for (std::size_t j = 0; j < un; ++j) ci[j] += aik * bk[j];
        }
    }
#else
    matmul_serial(a, b, c, n);
#endif
}

void matmul(const double* a, const double* b, double* c, int n) {
    if (openmp_enabled() && n >= kMatmulParallelThreshold)
        matmul_parallel(a, b, c, n);
    else
        matmul_serial(a, b, c, n);
}

void closure_serial(std::uint8_t* reach, int n) {
    const std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < un; ++k) {
        const std::uint8_t* rk = reach + k * un;
        for (std::size_t i = 0; i < un; ++i) {
            std::uint8_t* ri = reach + i * un;
            if (!ri[k]) continue;
            for (std::size_t j = 0; j < un; ++j) ri[j] |= rk[j];
        }
    }
}

void closure_parallel(std::uint8_t* reach, int n) {
#ifdef _OPENMP
    const std::size_t un = static_cast<std::size_t>(n);
    // One team for the whole sweep; row k is a fixed point of its own
    // iteration, so rows split freely within a k step, and the implicit
    // barrier of the worksharing loop orders the k steps.
#pragma omp parallel
    for (std::size_t k = 0; k < un; ++k) {
        const std::uint8_t* rk = reach + k * un;
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) {
            std::uint8_t* ri = reach + static_cast<std::size_t>(i) * un;
            if (!ri[k]) continue;
            for (std::size_t j = 0; j < un; ++j) ri[j] |= rk[j];
        }
    }
#else
    closure_serial(reach, n);
#endif
}

void closure(std::uint8_t* reach, int n) {
    if (openmp_enabled() && n >= kClosureParallelThreshold)
        closure_parallel(reach, n);
    else
        closure_serial(reach, n);
}

}  // namespace mfact::kernels
