// Scalar spherical-function components and their residual validations.

#include "hyperdirac/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace hyperdirac {

namespace {

JacobiParams first_params(const Geometry& g) {
    return JacobiParams(g.n / 2.0 - 1.0, g.n / 2.0);
}

JacobiParams second_params(const Geometry& g) {
    return JacobiParams(g.n / 2.0, g.n / 2.0 - 1.0);
}

} // namespace

cdouble scalar_even(const Geometry& g, double r, double s) {
    if (s < 0.0)
        throw invalid_argument_error("scalar_even: s must be >= 0");
    JacobiEvaluator ev(first_params(g), 2.0 * r);
    return cdouble(std::cosh(s / 2.0) * ev.eval(s / 2.0), 0.0);
}

OddComponents scalar_odd(const Geometry& g, double r, double s) {
    if (g.parity != Parity::odd)
        throw invalid_argument_error("scalar_odd: requires odd dimension");
    if (s < 0.0)
        throw invalid_argument_error("scalar_odd: s must be >= 0");
    JacobiEvaluator ev1(first_params(g), 2.0 * r);
    JacobiEvaluator ev2(second_params(g), 2.0 * r);
    const double a = std::cosh(s / 2.0) * ev1.eval(s / 2.0);
    const double b = (2.0 * r / g.n) * std::sinh(s / 2.0) * ev2.eval(s / 2.0);
    OddComponents out;
    out.pp = cdouble(a, -b);
    out.pm = cdouble(a, b);
    out.mp = cdouble(a, b);
    out.mm = cdouble(a, -b);
    return out;
}

double ground_spherical(const Geometry& g, double s) {
    if (s < 0.0)
        throw invalid_argument_error("ground_spherical: s must be >= 0");
    JacobiEvaluator ev(JacobiParams((g.n - 2.0) / 2.0, -0.5), 0.0);
    return ev.eval(s);
}

double phi_tilde_identity_residual(const Geometry& g, double r, double s) {
    if (g.parity != Parity::odd)
        throw invalid_argument_error("phi_tilde_identity_residual: requires odd dimension");
    if (r == 0.0 || !(s > 0.0))
        throw invalid_argument_error("phi_tilde_identity_residual: need r != 0, s > 0");

    const cdouble ir(0.0, r);
    JacobiEvaluator ev2(second_params(g), 2.0 * r);
    const cdouble direct = (2.0 * ir / static_cast<double>(g.n))
        * std::sinh(s / 2.0) * ev2.eval(s / 2.0);

    JacobiEvaluator ev1(first_params(g), 2.0 * r);
    const double h = 1e-5 * std::max(1.0, s);
    const double dphi = (ev1.eval((s + h) / 2.0) - ev1.eval((s - h) / 2.0)) / (2.0 * h);
    const cdouble rhs = (static_cast<double>(g.n) / (2.0 * ir)) * std::sinh(s / 2.0)
            * ev1.eval(s / 2.0)
        + (1.0 / ir) * std::cosh(s / 2.0) * dphi;

    return std::abs(direct - rhs) / std::max(std::abs(direct), 1e-300);
}

double jacobi_ode_residual(const Geometry& g, double r, double s) {
    if (!(s > 0.0))
        throw invalid_argument_error("jacobi_ode_residual: s must be > 0");
    JacobiEvaluator ev(first_params(g), r);
    const double h = 1e-4;
    const double vm = ev.eval(s - h);
    const double v0 = ev.eval(s);
    const double vp = ev.eval(s + h);
    const double d1 = (vp - vm) / (2.0 * h);
    const double d2 = (vp - 2.0 * v0 + vm) / (h * h);
    const double drift = (g.n - 1.0) / std::tanh(s) + (g.n + 1.0) * std::tanh(s);
    const double eig = r * r + static_cast<double>(g.n) * g.n;
    const double res = d2 + drift * d1 + eig * v0;
    return std::abs(res) / std::max(1.0, std::abs(v0));
}

} // namespace hyperdirac
