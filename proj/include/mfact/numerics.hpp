#pragma once

#include "mfact/matrix.hpp"

namespace mfact::numerics {

// Largest eigenvalue modulus, via a dense eigensolver.  Robust on reducible
// nonnegative matrices, which is where power iteration gets into trouble.
double spectral_radius(const MMatrix& a);

// Smallest singular value.
double sigma_min(const MMatrix& a);

}  // namespace mfact::numerics
