#include "axblab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <stdexcept>

namespace axblab {
namespace {

// One set of cached FFTW plans and aligned scratch buffers per grid size.
// Plans are created with FFTW_ESTIMATE so the chosen algorithm (and hence
// the bit pattern of results) does not depend on runtime timing.
struct Plans {
    int n;
    double* real_buf;
    fftw_complex* cplx_buf;
    fftw_plan fwd;
    fftw_plan bwd;

    explicit Plans(int n_) : n(n_) {
        const std::size_t nreal = std::size_t(n) * n * n;
        const std::size_t ncplx = std::size_t(n) * n * (n / 2 + 1);
        real_buf = fftw_alloc_real(nreal);
        cplx_buf = fftw_alloc_complex(ncplx);
        fwd = fftw_plan_dft_r2c_3d(n, n, n, real_buf, cplx_buf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_3d(n, n, n, cplx_buf, real_buf, FFTW_ESTIMATE);
    }
    ~Plans() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }
    Plans(const Plans&) = delete;
    Plans& operator=(const Plans&) = delete;
};

Plans& plans_for(int n) {
    static std::map<int, Plans*> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new Plans(n)).first;
    return *it->second;
}

}  // namespace

SpectralField to_spectral(const ScalarField& u) {
    if (!u.samples.allFinite())
        throw std::invalid_argument("to_spectral: non-finite sample values");
    const int n = u.grid.n;
    Plans& p = plans_for(n);
    const std::size_t nreal = u.grid.point_count();
    for (std::size_t i = 0; i < nreal; ++i) p.real_buf[i] = u.samples[i];
    fftw_execute(p.fwd);
    SpectralField out(u.grid);
    const double scale = 1.0 / double(nreal);
    // The index-space DFT is corrected by the phase e^{ikL} = (-1)^{mx+my+mz},
    // putting the coefficients on the physical chart centered at x = 0.
    const int nzh = n / 2 + 1;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz) {
                const std::size_t i = u.grid.mode_index(ix, iy, iz);
                const double s = ((ix + iy + iz) & 1) ? -scale : scale;
                out.coeff[i] = Complex(p.cplx_buf[i][0] * s, p.cplx_buf[i][1] * s);
            }
    return out;
}

ScalarField to_physical(const SpectralField& uh) {
    const int n = uh.grid.n;
    Plans& p = plans_for(n);
    const int nzh = n / 2 + 1;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz) {
                const std::size_t i = uh.grid.mode_index(ix, iy, iz);
                const double s = ((ix + iy + iz) & 1) ? -1.0 : 1.0;
                p.cplx_buf[i][0] = s * uh.coeff[i].real();
                p.cplx_buf[i][1] = s * uh.coeff[i].imag();
            }
    fftw_execute(p.bwd);  // unnormalized: yields sum_k c_k e^{ik.x}
    ScalarField out(uh.grid);
    const std::size_t nreal = uh.grid.point_count();
    for (std::size_t i = 0; i < nreal; ++i) out.samples[i] = p.real_buf[i];
    return out;
}

SpectralVectorField to_spectral(const VectorField& v) {
    SpectralVectorField out;
    out.grid = v.grid;
    for (int c = 0; c < 3; ++c) out.comp[c] = to_spectral(ScalarField(v.grid, v.comp[c])).coeff;
    return out;
}

VectorField to_physical(const SpectralVectorField& vh) {
    VectorField out;
    out.grid = vh.grid;
    for (int c = 0; c < 3; ++c) out.comp[c] = to_physical(SpectralField(vh.grid, vh.comp[c])).samples;
    return out;
}

double l2_norm(const SpectralField& uh) {
    const GridSpec& g = uh.grid;
    const int n = g.n, nzh = n / 2 + 1;
    double acc = 0.0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < nzh; ++iz) {
                const Complex c = uh.coeff[g.mode_index(ix, iy, iz)];
                acc += mode_weight(g, iz) * std::norm(c);
            }
    return std::sqrt(g.box_volume() * acc);
}

ScalarField coordinate_field(const GridSpec& grid, int axis) {
    ScalarField out(grid);
    const int n = grid.n;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const int idx[3] = {ix, iy, iz};
                out.at(ix, iy, iz) = grid.coord(idx[axis]);
            }
    return out;
}

ScalarField coordinate_multiply(const ScalarField& u, int axis) {
    ScalarField out(u.grid);
    const int n = u.grid.n;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const int idx[3] = {ix, iy, iz};
                out.at(ix, iy, iz) = u.at(ix, iy, iz) * u.grid.coord(idx[axis]);
            }
    return out;
}

}  // namespace axblab
