#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hyperdirac {
namespace detail {

using cdouble = std::complex<double>;

// Neumaier-compensated accumulation; deterministic for a fixed add order.
struct KahanSum {
    cdouble sum{0.0, 0.0};
    cdouble comp{0.0, 0.0};

    void add(cdouble term) {
        const cdouble t = sum + term;
        const double cr = (std::abs(sum.real()) >= std::abs(term.real()))
            ? (sum.real() - t.real()) + term.real()
            : (term.real() - t.real()) + sum.real();
        const double ci = (std::abs(sum.imag()) >= std::abs(term.imag()))
            ? (sum.imag() - t.imag()) + term.imag()
            : (term.imag() - t.imag()) + sum.imag();
        comp += cdouble(cr, ci);
        sum = t;
    }

    cdouble value() const { return sum + comp; }
};

struct QuadResult {
    cdouble value{0.0, 0.0};
    double est_error = 0.0;
    long evaluations = 0;
};

// 15-point Gauss-Kronrod rule on [a, b]; err from the embedded 7-point Gauss.
QuadResult gk15(const std::function<cdouble(double)>& f, double a, double b);

// Deterministic adaptive bisection: splits while |K15 - G7| exceeds
// max(abs_tol * (panel/(b-a)), rel_tol * |panel value|), depth-first
// left-to-right so the accumulation order is reproducible.
QuadResult adaptive_gk(const std::function<cdouble(double)>& f, double a, double b,
                       double rel_tol = 1e-11, double abs_tol = 1e-14, int max_depth = 28);

// Polynomial extrapolation of (x_k, y_k) to x = 0 (Neville with level-wide
// spans) using points 0..deg.
cdouble neville_at_zero(const std::vector<double>& x, const std::vector<cdouble>& y, int deg);

// Gregory end-corrected trapezoid weights (order 6) for a uniform grid of
// size n >= 8 with spacing h.
std::vector<double> gregory_weights(size_t n, double h);

} // namespace detail
} // namespace hyperdirac
