#pragma once

#include <cstdint>

namespace mfact::kernels {

// Dense kernels behind the hot loops: the boolean reachability closure and
// the n^3 matrix product used by the verification engine.  Each has a serial
// reference implementation and an OpenMP variant; the undecorated entry
// points dispatch on problem size.  The parallel variants partition by row,
// so results are bit-identical to the serial ones.

bool openmp_enabled();
// Smallest n each dispatcher hands to OpenMP.
int matmul_parallel_threshold();
int closure_parallel_threshold();

// c = a * b, all n x n row major.  c must not alias a or b.
void matmul_serial(const double* a, const double* b, double* c, int n);
void matmul_parallel(const double* a, const double* b, double* c, int n);
void matmul(const double* a, const double* b, double* c, int n);

// In-place transitive closure (Floyd-Warshall) of a boolean n x n matrix.
// The caller seeds edges and the reflexive diagonal.
void closure_serial(std::uint8_t* reach, int n);
void closure_parallel(std::uint8_t* reach, int n);
void closure(std::uint8_t* reach, int n);

}  // namespace mfact::kernels
