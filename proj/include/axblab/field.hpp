#pragma once

#include <array>
#include <complex>
#include <Eigen/Core>

#include "axblab/grid.hpp"

namespace axblab {

using Array = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;
using Complex = std::complex<double>;

/// Real samples on the periodic grid.  Index layout: (ix*n + iy)*n + iz.
struct ScalarField {
    GridSpec grid;
    Array samples;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), samples(Array::Zero(g.point_count())) {}
    ScalarField(const GridSpec& g, Array s) : grid(g), samples(std::move(s)) {}

    double& at(int ix, int iy, int iz) { return samples[grid.sample_index(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return samples[grid.sample_index(ix, iy, iz)]; }
};

/// Three scalar components sharing one grid.
struct VectorField {
    GridSpec grid;
    std::array<Array, 3> comp;

    VectorField() = default;
    explicit VectorField(const GridSpec& g)
        : grid(g), comp{Array::Zero(g.point_count()), Array::Zero(g.point_count()),
                        Array::Zero(g.point_count())} {}

    ScalarField component(int i) const { return ScalarField(grid, comp[i]); }
};

/// Half-complex Fourier coefficients c_k of a real field, u(x) = sum_k c_k e^{ik.x}.
///
/// Only modes with iz in [0, n/2] are stored; the remaining ones are implied
/// by Hermitian symmetry c_{-k} = conj(c_k), which is the type invariant that
/// keeps inverse transforms real.  Index layout: (ix*n + iy)*(n/2+1) + iz.
struct SpectralField {
    GridSpec grid;
    ComplexArray coeff;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid(g), coeff(ComplexArray::Zero(g.mode_count())) {}
    SpectralField(const GridSpec& g, ComplexArray c) : grid(g), coeff(std::move(c)) {}

    Complex& at(int ix, int iy, int iz) { return coeff[grid.mode_index(ix, iy, iz)]; }
    Complex at(int ix, int iy, int iz) const { return coeff[grid.mode_index(ix, iy, iz)]; }

    Complex mean() const { return coeff[0]; }
};

/// Spectral counterpart of VectorField.
struct SpectralVectorField {
    GridSpec grid;
    std::array<ComplexArray, 3> comp;

    SpectralVectorField() = default;
    explicit SpectralVectorField(const GridSpec& g)
        : grid(g), comp{ComplexArray::Zero(g.mode_count()), ComplexArray::Zero(g.mode_count()),
                        ComplexArray::Zero(g.mode_count())} {}

    SpectralField component(int i) const { return SpectralField(grid, comp[i]); }
};

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator+");
    return ScalarField(a.grid, a.samples + b.samples);
}
inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator-");
    return ScalarField(a.grid, a.samples - b.samples);
}
inline ScalarField operator*(double c, const ScalarField& a) {
    return ScalarField(a.grid, c * a.samples);
}

/// Pointwise product of sample values (no dealiasing).
inline ScalarField pointwise(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "pointwise");
    return ScalarField(a.grid, a.samples * b.samples);
}

/// Multiplication by the coordinate function x_axis on the chart [-L, L).
ScalarField coordinate_multiply(const ScalarField& u, int axis);

/// Samples of the coordinate function itself.
ScalarField coordinate_field(const GridSpec& grid, int axis);

}  // namespace axblab
