#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hyperdirac/geometry.hpp"
#include "hyperdirac/propagator.hpp"
#include "hyperdirac/specfun.hpp"

namespace hyperdirac {

// A sampled scalar spinor component f(s) on a geodesic-radius grid.
struct RadialProfile {
    Geometry geometry;
    std::vector<double> s_grid;
    std::vector<cdouble> values;
};

// Sampled transform values on a frequency grid. Odd dimension carries the
// (plus, minus) pair on r >= 0, encoding h_+(-r) = h_-(r); even dimension
// stores a single even-in-r component.
struct SpectralCoefficients {
    Geometry geometry;
    std::vector<double> r_grid;
    std::vector<cdouble> plus;
    std::optional<std::vector<cdouble>> minus;
};

enum class SpectralSign { plus, minus };

// Dense forward/inverse transform pair on fixed uniform grids. The kernels
// are the scalar spherical-function components against the Cartan measure
// (2 sinh s)^{n-1} ds forward and the Plancherel measure mu(r) dr inverse;
// the overall normalization is calibrated once at construction by a
// round-trip on a reference Gaussian and then frozen.
//
// Matrices are immutable after construction; applications are pure and
// thread-safe.
class SphericalTransform {
public:
    SphericalTransform(const Geometry& g, std::vector<double> s_grid,
                       std::vector<double> r_grid, int threads = 0);

    SpectralCoefficients forward(const RadialProfile& f) const;
    RadialProfile inverse(const SpectralCoefficients& h) const;

    double normalization() const { return n_fwd_; }
    const Geometry& geometry() const { return geom_; }
    const std::vector<double>& s_grid() const { return s_grid_; }
    const std::vector<double>& r_grid() const { return r_grid_; }

    static std::vector<double> default_s_grid(); // 2048 points on [0, 20]
    static std::vector<double> default_r_grid(); // 4096 points on [0, 40]

    // Process-wide transform on the default grids, built on first use.
    static const SphericalTransform& shared(const Geometry& g);

private:
    SpectralCoefficients forward_raw(const RadialProfile& f) const;
    RadialProfile inverse_raw(const SpectralCoefficients& h) const;

    Geometry geom_;
    std::vector<double> s_grid_, r_grid_;
    std::vector<double> ws_;   // Gregory weights * Cartan measure on s_grid
    std::vector<double> wr_;   // Gregory weights * Plancherel density on r_grid
    std::vector<double> a_;    // shared kernel, r-major [nr][ns]
    std::vector<double> b_;    // odd-dimension kernel part (empty when even)
    double n_fwd_ = 1.0;
};

// Free-function layer over a process-wide cache keyed by (n, grids).
SpectralCoefficients forward_transform(const RadialProfile& f);
RadialProfile inverse_transform(const SpectralCoefficients& h, const std::vector<double>& s_grid);

// Spectral projection onto the +/- half of the spectrum (odd dimension only).
SpectralCoefficients spectral_project(const SpectralCoefficients& h, SpectralSign sign);

// Coefficientwise multiplication by (r^2 + r0)^{-theta/2} e^{itr}.
SpectralCoefficients evolve_half_wave(const SpectralCoefficients& h, double t,
                                      const SmoothingOrder& theta);

// L^q norm against the Cartan measure on the profile's own grid;
// q may be infinity (sup over the grid).
double norm_track(const RadialProfile& f, double q);

// Weighted-l2 norm of coefficients: (sum w mu (|plus|^2 + |minus|^2))^{1/2}.
double spectral_norm(const SpectralCoefficients& h);

// Columnar text format:
//   # hyperdirac-profile v1 n=<n> parity=<even|odd>
//   s,value_re,value_im
// and for spectra
//   # hyperdirac-spectrum v1 n=<n> parity=<even|odd>
//   r,plus_re,plus_im[,minus_re,minus_im]
void write_profile(std::ostream& os, const RadialProfile& f);
RadialProfile read_profile(std::istream& is);
void write_spectrum(std::ostream& os, const SpectralCoefficients& h);
SpectralCoefficients read_spectrum(std::istream& is);

} // namespace hyperdirac
