#pragma once

#include <cmath>

#include "axblab/fft.hpp"
#include "axblab/rng.hpp"
#include "axblab/spectral_ops.hpp"

namespace axblab::test {

/// White random samples in [-1, 1).
inline ScalarField random_field(const GridSpec& g, Rng& rng) {
    ScalarField u(g);
    for (std::size_t i = 0; i < g.point_count(); ++i) u.samples[i] = rng.symmetric();
    return u;
}

/// Random field with spectrum confined to |k| <= kcut (isotropic cut).
inline ScalarField random_band_limited(const GridSpec& g, Rng& rng, double kcut) {
    ScalarField u = random_field(g, rng);
    SpectralField uh = to_spectral(u);
    SpectralField cut = apply_multiplier(uh, [kcut](double kx, double ky, double kz) {
        const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
        return Complex(k <= kcut ? 1.0 : 0.0, 0.0);
    });
    return to_physical(cut);
}

/// Isotropic Gaussian exp(-|x - c|^2 / w^2).
inline ScalarField gaussian_field(const GridSpec& g, double w, double cx = 0.0, double cy = 0.0,
                                  double cz = 0.0, double amp = 1.0) {
    ScalarField u(g);
    for (int ix = 0; ix < g.n; ++ix) {
        const double x = g.coord(ix) - cx;
        for (int iy = 0; iy < g.n; ++iy) {
            const double y = g.coord(iy) - cy;
            for (int iz = 0; iz < g.n; ++iz) {
                const double z = g.coord(iz) - cz;
                u.at(ix, iy, iz) = amp * std::exp(-(x * x + y * y + z * z) / (w * w));
            }
        }
    }
    return u;
}

/// Sum of a few randomly placed Gaussian bumps, compact inside |x| <= 3L/4.
inline ScalarField random_bump_field(const GridSpec& g, Rng& rng, int count = 3) {
    ScalarField u(g);
    for (int b = 0; b < count; ++b) {
        const double w = rng.uniform(0.5, 1.2);
        const double c = g.L / 4.0;
        ScalarField bump = gaussian_field(g, w, rng.uniform(-c, c), rng.uniform(-c, c),
                                          rng.uniform(-c, c), rng.symmetric());
        u.samples += bump.samples;
    }
    return u;
}

inline double rel_linf_error(const ScalarField& a, const ScalarField& b) {
    const double scale = a.samples.abs().maxCoeff();
    return (a.samples - b.samples).abs().maxCoeff() / (scale > 0 ? scale : 1.0);
}

inline double rel_l2_error(const ScalarField& a, const ScalarField& b) {
    const double scale = std::sqrt(a.samples.square().sum());
    return std::sqrt((a.samples - b.samples).square().sum()) / (scale > 0 ? scale : 1.0);
}

}  // namespace axblab::test
