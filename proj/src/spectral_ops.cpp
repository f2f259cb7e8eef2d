#include "axblab/spectral_ops.hpp"

#include <algorithm>

namespace axblab {

SpectralField derivative(const SpectralField& uh, int axis) {
    const GridSpec& g = uh.grid;
    SpectralField out(g);
    const int n = g.n, nzh = n / 2 + 1;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz) {
                const int i3[3] = {ix, iy, iz};
                const double k = g.k_dyn(i3[axis]);
                out.coeff[g.mode_index(ix, iy, iz)] =
                    Complex(0.0, k) * uh.coeff[g.mode_index(ix, iy, iz)];
            }
    return out;
}

SpectralField laplacian(const SpectralField& uh) {
    return apply_multiplier(uh, [](double kx, double ky, double kz) {
        return Complex(-(kx * kx + ky * ky + kz * kz), 0.0);
    });
}

SpectralField inverse_laplacian(const SpectralField& uh) {
    return apply_multiplier(uh, [](double kx, double ky, double kz) {
        const double k2 = kx * kx + ky * ky + kz * kz;
        return k2 == 0.0 ? Complex(0.0, 0.0) : Complex(-1.0 / k2, 0.0);
    });
}

SpectralField riesz(const SpectralField& uh, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("riesz: axes must be in {1,2,3}");
    return apply_multiplier(uh, [i, j](double kx, double ky, double kz) {
        const double k[3] = {kx, ky, kz};
        const double k2 = kx * kx + ky * ky + kz * kz;
        return k2 == 0.0 ? Complex(0.0, 0.0) : Complex(k[i - 1] * k[j - 1] / k2, 0.0);
    });
}

SpectralVectorField gradient(const SpectralField& uh) {
    SpectralVectorField out;
    out.grid = uh.grid;
    for (int c = 0; c < 3; ++c) out.comp[c] = derivative(uh, c).coeff;
    return out;
}

SpectralField divergence(const SpectralVectorField& vh) {
    SpectralField out(vh.grid);
    for (int c = 0; c < 3; ++c)
        out.coeff += derivative(SpectralField(vh.grid, vh.comp[c]), c).coeff;
    return out;
}

SpectralVectorField curl(const SpectralVectorField& vh) {
    const GridSpec& g = vh.grid;
    SpectralVectorField out;
    out.grid = g;
    auto d = [&](int comp, int axis) { return derivative(SpectralField(g, vh.comp[comp]), axis).coeff; };
    out.comp[0] = d(2, 1) - d(1, 2);
    out.comp[1] = d(0, 2) - d(2, 0);
    out.comp[2] = d(1, 0) - d(0, 1);
    return out;
}

SpectralVectorField leray_project(const SpectralVectorField& vh) {
    const GridSpec& g = vh.grid;
    SpectralVectorField out;
    out.grid = g;
    for (int c = 0; c < 3; ++c) out.comp[c] = vh.comp[c];
    // k_dyn keeps the projector consistent with the derivative convention,
    // so div(P v) vanishes identically in our own divergence.
    const int n = g.n, nzh = n / 2 + 1;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = g.k_dyn(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = g.k_dyn(iy);
            for (int iz = 0; iz < nzh; ++iz) {
                const double kz = g.k_dyn(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;  // mean is kept
                const std::size_t idx = g.mode_index(ix, iy, iz);
                const Complex kdotv =
                    kx * out.comp[0][idx] + ky * out.comp[1][idx] + kz * out.comp[2][idx];
                out.comp[0][idx] -= kx * kdotv / k2;
                out.comp[1][idx] -= ky * kdotv / k2;
                out.comp[2][idx] -= kz * kdotv / k2;
            }
        }
    }
    return out;
}

VectorField leray_project(const VectorField& v) {
    return to_physical(leray_project(to_spectral(v)));
}

double lebesgue_norm(const ScalarField& u, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lebesgue_norm: exponent must satisfy p >= 1");
    if (std::isinf(p)) return u.samples.abs().maxCoeff();
    const double h3 = u.grid.cell_volume();
    // fixed-order accumulation keeps the reduction bit-reproducible
    double acc = 0.0;
    const std::size_t npts = u.grid.point_count();
    if (p == 2.0) {
        for (std::size_t i = 0; i < npts; ++i) acc += u.samples[i] * u.samples[i];
    } else if (p == 1.0) {
        for (std::size_t i = 0; i < npts; ++i) acc += std::abs(u.samples[i]);
    } else {
        for (std::size_t i = 0; i < npts; ++i) acc += std::pow(std::abs(u.samples[i]), p);
    }
    return std::pow(h3 * acc, 1.0 / p);
}

double sobolev_norm(const SpectralField& uh, double s) {
    const GridSpec& g = uh.grid;
    const int n = g.n, nzh = n / 2 + 1;
    double acc = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = g.k_axis(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = g.k_axis(iy);
            for (int iz = 0; iz < nzh; ++iz) {
                const double kz = g.wavenumber(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                acc += mode_weight(g, iz) * std::pow(1.0 + k2, s) *
                       std::norm(uh.coeff[g.mode_index(ix, iy, iz)]);
            }
        }
    }
    return std::sqrt(g.box_volume() * acc);
}

ScalarField convolve(const ScalarField& u, const ScalarField& w) {
    require_same_grid(u.grid, w.grid, "convolve");
    SpectralField uh = to_spectral(u), wh = to_spectral(w);
    SpectralField ph(u.grid);
    ph.coeff = u.grid.box_volume() * uh.coeff * wh.coeff;
    return to_physical(ph);
}

SpectralField dealias(const SpectralField& uh) {
    const GridSpec& g = uh.grid;
    SpectralField out = uh;
    const int n = g.n, nzh = n / 2 + 1, cut = n / 3;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz)
                if (std::abs(g.signed_mode(ix)) > cut || std::abs(g.signed_mode(iy)) > cut ||
                    iz > cut)
                    out.coeff[g.mode_index(ix, iy, iz)] = Complex(0.0, 0.0);
    return out;
}

SpectralField dealiased_product(const SpectralField& uh, const SpectralField& wh) {
    require_same_grid(uh.grid, wh.grid, "dealiased_product");
    ScalarField u = to_physical(dealias(uh));
    ScalarField w = to_physical(dealias(wh));
    return dealias(to_spectral(pointwise(u, w)));
}

SpectralField advect(const SpectralVectorField& vh, const SpectralField& uh) {
    require_same_grid(vh.grid, uh.grid, "advect");
    const GridSpec& g = vh.grid;
    ScalarField u = to_physical(dealias(uh));
    SpectralField out(g);
    for (int c = 0; c < 3; ++c) {
        ScalarField vc = to_physical(dealias(SpectralField(g, vh.comp[c])));
        out.coeff += derivative(dealias(to_spectral(pointwise(vc, u))), c).coeff;
    }
    return out;
}

}  // namespace axblab
