#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hyperdirac/errors.hpp"

namespace hyperdirac {

using cdouble = std::complex<double>;

// Principal branch of log Gamma (real on the positive axis, analytic on the
// plane cut along the nonpositive reals). Throws pole_error within 1e-14 of a
// nonpositive integer.
cdouble log_gamma(cdouble z);

// Gauss hypergeometric 2F1(a, b; c; z) for real z <= 0, evaluated through the
// Pfaff map w = z/(z-1) in [0, 1) followed by series summation with
// compensated accumulation. Throws invalid_argument_error for z > 0 or c a
// nonpositive integer, numerics_error if the series needs more than term_cap
// terms.
cdouble hyp2f1(cdouble a, cdouble b, cdouble c, double z, int term_cap = 100000);

// Jacobi parameter pair (alpha, beta); rho() = alpha + beta + 1.
struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(alpha > -1.0))
            throw invalid_argument_error("JacobiParams: alpha must be > -1");
    }

    double rho() const { return alpha + beta + 1.0; }
};

// phi_lambda^{(alpha,beta)}(t) = 2F1((rho+i lambda)/2, (rho-i lambda)/2; alpha+1; -sinh^2 t),
// the even solution of the Jacobi equation normalized to 1 at t = 0.
// Real-valued for real lambda; returned as complex per the layer contract.
cdouble jacobi_phi(const JacobiParams& p, double lambda, double t);

namespace detail {

// Harish-Chandra c-function for general Jacobi parameters,
//   c(lambda) = 2^{rho-i lambda} Gamma(alpha+1) Gamma(i lambda)
//               / [Gamma((rho+i lambda)/2) Gamma((alpha-beta+1+i lambda)/2)].
cdouble jacobi_c_function(const JacobiParams& p, double lambda);

// Coefficients of the outgoing-wave expansion
//   Phi_lambda(t) = e^{(i lambda - rho) t} sum_{m>=0} coef[m] e^{-2 m t},
// obtained by inserting the ansatz into the Jacobi equation:
//   2m(m - i lambda) coef[m] =
//     sum_{j<m} [(2a+1) + (-1)^{m-j} (2b+1)] (2j + rho - i lambda) coef[j] / 2.
std::vector<cdouble> hc_expansion_coefficients(const JacobiParams& p, double lambda, int m_max);

} // namespace detail

// Prepared evaluator for repeated t-sweeps at fixed (params, lambda).
// Chooses between the Pfaff series (small lambda * tanh t) and the
// Harish-Chandra expansion (everything else); near lambda = 0 the expansion
// branch extrapolates evenly in lambda^2 from three off-axis nodes.
// Memoizes expansion coefficients on demand: not thread-safe, use one
// instance per thread.
class JacobiEvaluator {
public:
    JacobiEvaluator(const JacobiParams& p, double lambda);

    // phi_lambda^{(alpha,beta)}(t); real part of the defining expression.
    double eval(double t);

    const JacobiParams& params() const { return params_; }
    double lambda() const { return lambda_; }

private:
    struct HCData {
        double lambda = 0.0;
        cdouble c = 0.0;
        std::vector<cdouble> coef; // grown on demand
    };

    double pfaff_eval(double t) const;
    double hc_eval(HCData& d, double t);
    void grow(HCData& d, int m_needed);

    JacobiParams params_;
    double lambda_;
    std::optional<HCData> main_;        // present when |lambda| >= kLambdaMin
    std::vector<HCData> small_nodes_;   // three nodes for the lambda ~ 0 limit
};

} // namespace hyperdirac
