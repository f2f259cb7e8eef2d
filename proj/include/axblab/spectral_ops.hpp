#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "axblab/fft.hpp"

namespace axblab {

/// Coefficientwise product with the symbol m(kx, ky, kz).
///
/// With half-complex storage the implied conjugate modes receive conj(m(k)),
/// so the operation realizes the Hermitian part of the symbol; it is exact
/// whenever m(-k) = conj(m(k)).  Throws if m is non-finite at any grid
/// wavenumber, naming the offending wavenumber.
template <class Symbol>
SpectralField apply_multiplier(const SpectralField& uh, Symbol&& m) {
    const GridSpec& g = uh.grid;
    SpectralField out(g);
    const int n = g.n, nzh = n / 2 + 1;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = g.k_axis(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = g.k_axis(iy);
            for (int iz = 0; iz < nzh; ++iz) {
                const double kz = g.wavenumber(iz);
                const Complex mv = m(kx, ky, kz);
                if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
                    std::ostringstream os;
                    os << "apply_multiplier: non-finite symbol at k = (" << kx << ", " << ky
                       << ", " << kz << ")";
                    throw std::domain_error(os.str());
                }
                out.coeff[g.mode_index(ix, iy, iz)] = mv * uh.coeff[g.mode_index(ix, iy, iz)];
            }
        }
    }
    return out;
}

/// Spectral derivative d/dx_axis.  The Nyquist plane of the differentiated
/// axis is zeroed: the symbol ik is odd and the unpaired m = -n/2 mode would
/// otherwise break Hermitian symmetry.
SpectralField derivative(const SpectralField& uh, int axis);

SpectralField laplacian(const SpectralField& uh);

/// Multiplier -1/|k|^2 on nonzero modes; the zero mode is annihilated
/// (mean-removal gauge).
SpectralField inverse_laplacian(const SpectralField& uh);

/// Riesz operator R_ij with symbol k_i k_j / |k|^2 (zero mode -> 0).
/// Axes i, j are 1-based in {1, 2, 3}.
SpectralField riesz(const SpectralField& uh, int i, int j);

SpectralVectorField gradient(const SpectralField& uh);
SpectralField divergence(const SpectralVectorField& vh);
SpectralVectorField curl(const SpectralVectorField& vh);

/// Orthogonal projection onto divergence-free fields,
/// P = Id - k (k . )/|k|^2 modewise; the zero mode (the mean) is kept.
SpectralVectorField leray_project(const SpectralVectorField& vh);
VectorField leray_project(const VectorField& v);

/// Grid quadrature of (integral |u|^p dx)^(1/p); p = inf is max|u|.
double lebesgue_norm(const ScalarField& u, double p);

/// Sobolev norm (sum_k (1+|k|^2)^s |c_k|^2 (2L)^3)^(1/2).
double sobolev_norm(const SpectralField& uh, double s);

/// Periodic convolution normalized with the cell volume, so convolution
/// with a unit-mass discrete delta is the identity.
ScalarField convolve(const ScalarField& u, const ScalarField& w);

/// Zero all modes with any |m_axis| > n/3 (the 2/3 dealiasing rule).
SpectralField dealias(const SpectralField& uh);

/// Pointwise product with both factors and the result 2/3-truncated,
/// returned in spectral form.
SpectralField dealiased_product(const SpectralField& uh, const SpectralField& wh);

/// v . grad(u) assembled as div(v u) with dealiased products; exact for
/// divergence-free v.
SpectralField advect(const SpectralVectorField& vh, const SpectralField& uh);

/// Kernel of the multiplier m as a grid field: K = F^-1[m] normalized so
/// that convolve(K, u) = m(D) u.
template <class Symbol>
ScalarField multiplier_kernel(const GridSpec& grid, Symbol&& m) {
    SpectralField mh(grid);
    const int n = grid.n, nzh = n / 2 + 1;
    const double scale = 1.0 / grid.box_volume();
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz)
                mh.coeff[grid.mode_index(ix, iy, iz)] =
                    scale * m(grid.k_axis(ix), grid.k_axis(iy), grid.wavenumber(iz));
    return to_physical(mh);
}

}  // namespace axblab
