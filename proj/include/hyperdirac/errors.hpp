#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperdirac {

// Bad arguments or violated preconditions (CLI exit code 1).
class invalid_argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failures: poles, series non-convergence, tail truncation,
// quadrature divergence (CLI exit code 2).
class numerics_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class pole_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

// Quadrature did not converge within the error contract. Carries the best
// available value and its error estimate so callers can still certify bounds.
class nonconvergence_error : public numerics_error {
public:
    nonconvergence_error(const std::string& what, std::complex<double> value, double est_error)
        : numerics_error(what), value_(value), est_error_(est_error) {}

    std::complex<double> value() const { return value_; }
    double est_error() const { return est_error_; }

private:
    std::complex<double> value_;
    double est_error_;
};

} // namespace hyperdirac
