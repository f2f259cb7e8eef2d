#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace axblab {

/// Cubic periodic grid on the box [-L, L)^3 with n samples per axis.
///
/// Physical samples sit at x_i = -L + i * (2L/n).  The representable
/// wavenumbers are k = (pi/L) * m with integer m in [-n/2, n/2).
struct GridSpec {
    int n = 0;       ///< points per axis; power of two, >= 8
    double L = 0.0;  ///< box half-width

    double spacing() const { return 2.0 * L / n; }
    double cell_volume() const { double h = spacing(); return h * h * h; }
    double box_volume() const { return 8.0 * L * L * L; }

    /// Physical coordinate of sample index i in [0, n).
    double coord(int i) const { return -L + i * spacing(); }

    /// Signed integer mode for axis index i: m in [-n/2, n/2).
    int signed_mode(int i) const { return i < n / 2 ? i : i - n; }

    /// Wavenumber of integer mode m.
    double wavenumber(int m) const { return M_PI / L * m; }

    /// Wavenumber of axis index i under the signed-mode convention.
    double k_axis(int i) const { return wavenumber(signed_mode(i)); }

    /// Wavenumber for differential operators: the unpaired Nyquist mode is
    /// zeroed so odd symbols keep real fields real.
    double k_dyn(int i) const {
        const int m = signed_mode(i);
        return std::abs(m) == n / 2 ? 0.0 : wavenumber(m);
    }

    /// Largest axis wavenumber magnitude, pi*n/(2L).
    double nyquist() const { return M_PI / L * (n / 2); }

    std::size_t point_count() const { return std::size_t(n) * n * n; }
    /// Stored modes of the half-complex spectrum (z axis reduced).
    std::size_t mode_count() const { return std::size_t(n) * n * (n / 2 + 1); }

    std::size_t sample_index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * n + iy) * n + iz;
    }
    std::size_t mode_index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * n + iy) * (n / 2 + 1) + iz;
    }

    bool operator==(const GridSpec& o) const { return n == o.n && L == o.L; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

inline bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

/// Validated constructor.  n must be a power of two >= 8 and L > 0.
inline GridSpec make_grid(int n, double L) {
    if (n < 8 || !is_power_of_two(n))
        throw std::invalid_argument("GridSpec: n must be a power of two >= 8, got " +
                                    std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("GridSpec: box half-width must be positive");
    return GridSpec{n, L};
}

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

}  // namespace axblab
