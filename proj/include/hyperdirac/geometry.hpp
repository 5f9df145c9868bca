#pragma once

#include "hyperdirac/errors.hpp"

namespace hyperdirac {

enum class Parity { even, odd };

// Dimension-indexed constants of the real hyperbolic space H^n.
// rho = (n-1)/2 is the half-sum of positive roots, r0 = n(n-1)/4 the
// curvature shift appearing in the smoothed propagator.
struct Geometry {
    int n;
    double rho;
    double r0;
    Parity parity;

    static Geometry of_dimension(int n) {
        if (n < 2 || n > 9)
            throw invalid_argument_error("Geometry: dimension must be in [2, 9]");
        Geometry g;
        g.n = n;
        g.rho = (n - 1) / 2.0;
        g.r0 = n * (n - 1) / 4.0;
        g.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
        return g;
    }
};

} // namespace hyperdirac
