#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hyperdirac/geometry.hpp"
#include "hyperdirac/specfun.hpp"

namespace hyperdirac {

// Complex smoothing exponent theta of (D^2 + r0)^{-theta/2} e^{it|D|}.
struct SmoothingOrder {
    double re = 0.0;
    double im = 0.0;

    SmoothingOrder() = default;
    SmoothingOrder(double re_, double im_ = 0.0) : re(re_), im(im_) {
        if (re < 0.0)
            throw invalid_argument_error("SmoothingOrder: Re theta must be >= 0");
    }

    // critical value (n+1)/2 for a given dimension
    static SmoothingOrder critical(const Geometry& g) {
        return SmoothingOrder((g.n + 1) / 2.0);
    }

    cdouble as_complex() const { return cdouble(re, im); }
};

enum class CutoffKind { chi0, chi_inf };

struct CutoffSpec {
    CutoffKind kind = CutoffKind::chi0;
    double scale = 1.0; // evaluates chi(scale * r)
};

// Smooth partition cutoffs: chi0 = 1 on [0, 1/2], 0 on [1, inf),
// chi_inf = 1 - chi0, built from the exp(-1/u) bump.
double cutoff(const CutoffSpec& spec, double r);

enum class KernelPiece { I0, Iinf_minus, Iinf_plus, total };

// Scalar-component selector. sigma_sum adds the (at most two) components of
// the restriction; for odd n the odd-imaginary parts cancel in the sum.
enum class KernelComponent { sigma_sum, odd_pp, odd_pm, odd_mp, odd_mm };

struct KernelSample {
    double t = 0.0;
    double s = 0.0;
    SmoothingOrder theta;
    KernelPiece piece = KernelPiece::total;
    cdouble value{0.0, 0.0};
    double damping_eps = 0.0; // leading epsilon of the tail extrapolation
    double est_error = 0.0;
};

struct KernelOptions {
    double eps0 = 0.1;          // leading damping parameter
    double rel_tol = 1e-11;     // head quadrature relative tolerance
    bool throw_on_nonconvergence = true;
};

// One piece of the smoothed propagator kernel at (t, s):
//   int_0^inf [cutoffs](r) (r^2+r0)^{-theta/2} e^{itr} phi(r, s) mu(r) dr,
// phi the selected scalar component. Head by adaptive quadrature, oscillatory
// tail by an exact finite stretch plus e^{-eps r}-damped integrals at
// eps0 {1, 1/2, 1/4, 1/8} extrapolated to eps = 0 (cubic in eps).
// Throws invalid_argument_error for t = 0 and out-of-range (n, theta);
// throws nonconvergence_error when est_error > 1e-4 |value| + 1e-10.
KernelSample kernel_piece(const Geometry& g, const SmoothingOrder& theta, KernelPiece piece,
                          double t, double s,
                          KernelComponent component = KernelComponent::sigma_sum,
                          const KernelOptions& opts = {});

// Sum of the three pieces, evaluated as one integral with the cutoffs summed
// analytically to 1; error accumulation as in kernel_piece.
KernelSample kernel_total(const Geometry& g, const SmoothingOrder& theta, double t, double s,
                          KernelComponent component = KernelComponent::sigma_sum,
                          const KernelOptions& opts = {});

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rsquared = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
};

// Ordinary least squares of log(magnitude) against log(t) over the samples
// inside [t_min, t_max]. Requires >= 5 samples in window, all magnitudes > 0.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples,
                   double t_min, double t_max);

// Kunze-Stein A_q functional of a radial profile:
//   ( int_0^S |profile(s)|^{q/2} phi_0(s) (2 sinh s)^{n-1} ds )^{2/q},
// S grown until the tail falls below 1e-12 of the running integral; throws
// numerics_error if that fails by S = 100. Requires q > 2.
double ks_norm_bound(const Geometry& g, const std::function<double(double)>& profile, double q);

} // namespace hyperdirac
