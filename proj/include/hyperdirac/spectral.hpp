#pragma once

#include <vector>

#include "hyperdirac/geometry.hpp"
#include "hyperdirac/specfun.hpp"

namespace hyperdirac {

// Harish-Chandra c-function c(r) = 2^{n-ir} G(n/2) G(ir) / (G((n+ir)/2) G(ir/2)).
// Throws pole_error at r = 0.
cdouble c_function_raw(const Geometry& g, double r);

// Duplication-reduced form: c(2r) = 2 G(n-1)/G((n-1)/2) * G(ir+1/2)/G(ir+n/2).
// Entire in r; agrees with c_function_raw(g, 2r) wherever both are defined.
cdouble c_function_simplified(const Geometry& g, double r);

// Spectral density of the spinor spherical transform. Even in r; the even-n
// factor r coth(pi r) takes its limit 1/pi at the origin.
double plancherel_density(const Geometry& g, double r);

// Expansion coefficients Gamma_{2m}(r) of Phi_r(s) = e^{(ir-n)s} sum Gamma_m e^{-ms}.
//
// `values` holds the coefficients produced by the bare sum
//   Gamma_{2m}(r) = sum_{m'<m} (delta_{m'}^m (n+1) - 1) (2m'+n-ir) / (m(m-ir)),
// whose exact algebraic split into an r-free part C_{n,m} and an O(1/r) part
// is carried in `split_c` / `split_tilde`. `ode_values` holds the
// coefficients obtained by inserting the ansatz into the Jacobi equation,
// which weights each summand by Gamma_{2m'}. The two families agree for
// m <= 1 and then diverge; `printed_vs_ode_max_dev` records by how much.
// The series evaluator uses `ode_values` (see hc_series), since only those
// reproduce the Jacobi function through the expansion identity.
struct HCCoefficients {
    Geometry geometry;
    int max_index = 0;
    double r = 0.0;
    std::vector<cdouble> values;      // values[m] = Gamma_{2m}(r), bare sum
    std::vector<cdouble> ode_values;  // operative coefficients
    std::vector<double> split_c;      // C_{n,m}
    std::vector<cdouble> split_tilde; // tilde Gamma_{2m}(r)
    double printed_vs_ode_max_dev = 0.0;
};

HCCoefficients hc_coefficients(const Geometry& g, double r, int m_max);

struct HCSeriesResult {
    cdouble value;
    double last_term_magnitude = 0.0;
    bool truncation_ok = true; // last-term magnitude <= 1e-12 * |partial sum|
};

// Partial sum e^{(ir-n)s} sum_{m=0}^{m_max} Gamma_m(r) e^{-ms} over the
// operative coefficients (odd-index terms vanish identically).
HCSeriesResult hc_series(const Geometry& g, double r, double s, int m_max);

struct MuCConsistency {
    double constant = 0.0; // mean of mu(r) |c(2r)|^2 over the grid
    double spread = 0.0;   // (max - min) / |mean|
};

// The product mu(r) |c(2r)|^2 across a grid of r > 0. Constancy is the
// assertion; the constant itself is recorded, not asserted.
MuCConsistency mu_c_consistency(const Geometry& g, const std::vector<double>& r_grid);

} // namespace hyperdirac
