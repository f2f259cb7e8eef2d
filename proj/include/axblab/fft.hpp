#pragma once

#include "axblab/field.hpp"

namespace axblab {

/// Forward transform.  Coefficients are Fourier-series coefficients:
/// c_k = n^-3 sum_x u(x) e^{-ik.x}, so that u(x) = sum_k c_k e^{ik.x}.
/// Rejects non-finite input samples.
SpectralField to_spectral(const ScalarField& u);

/// Inverse transform (exactly inverts to_spectral to machine precision).
ScalarField to_physical(const SpectralField& uh);

SpectralVectorField to_spectral(const VectorField& v);
VectorField to_physical(const SpectralVectorField& vh);

/// Multiplicity of a stored half-complex mode when summing over the full
/// spectrum: 2 for 0 < iz < n/2, otherwise 1.
inline double mode_weight(const GridSpec& g, int iz) {
    return (iz == 0 || iz == g.n / 2) ? 1.0 : 2.0;
}

/// Parseval form of the L^2 norm: ||u||_2^2 = (2L)^3 sum_k |c_k|^2.
double l2_norm(const SpectralField& uh);

}  // namespace axblab
