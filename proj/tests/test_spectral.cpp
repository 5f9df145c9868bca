#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hyperdirac/spectral.hpp"
#include "hyperdirac/specfun.hpp"

using namespace hyperdirac;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("c-function: raw(2r) equals simplified(r)") {
    for (int n = 2; n <= 9; ++n) {
        const Geometry g = Geometry::of_dimension(n);
        for (int k = 0; k < 50; ++k) {
            const double r = 0.05 + 0.37 * k;
            const cdouble a = c_function_raw(g, 2.0 * r);
            const cdouble b = c_function_simplified(g, r);
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
        }
    }
}

TEST_CASE("c-function: spot value n=3, r=1 is 0.8 - 1.6i") {
    const Geometry g = Geometry::of_dimension(3);
    const cdouble v = c_function_simplified(g, 1.0);
    CHECK(v.real() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(-1.6).epsilon(1e-12));
}

TEST_CASE("c-function: conjugate symmetry") {
    const Geometry g = Geometry::of_dimension(4);
    const cdouble a = c_function_raw(g, -1.7);
    const cdouble b = std::conj(c_function_raw(g, 1.7));
    CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
}

TEST_CASE("c-function: pole at r = 0 and finiteness elsewhere") {
    const Geometry g = Geometry::of_dimension(2);
    CHECK_THROWS_AS((void)c_function_raw(g, 0.0), pole_error);
    const cdouble v = c_function_raw(g, 1.0);
    CHECK(std::isfinite(v.real()));
    CHECK(std::abs(v) > 0.0);
}

TEST_CASE("c-function: large-r growth constant") {
    // |c(2r)^{-1}| / r^{(n-1)/2} -> Gamma((n-1)/2) / (2 Gamma(n-1)), from
    // |Gamma(ir + n/2) / Gamma(ir + 1/2)| ~ r^{(n-1)/2}; exact value 1/2 at n=3
    for (int n : {2, 3, 4, 5}) {
        const Geometry g = Geometry::of_dimension(n);
        const double r = 1000.0;
        const double got = 1.0 / std::abs(c_function_simplified(g, r))
            / std::pow(r, (n - 1) / 2.0);
        const double want = std::exp(log_gamma(cdouble((n - 1) / 2.0, 0)).real()
                                     - std::log(2.0)
                                     - log_gamma(cdouble(n - 1.0, 0)).real());
        CHECK(got == doctest::Approx(want).epsilon(0.01));
    }
}

TEST_CASE("c-function symbol decay of r^{-1} c(2r)^{-1}") {
    // finite-difference derivatives of w(r) = r^{-1} c(2r)^{-1} should decay
    // one extra power per derivative; assert the log-log slope over [1, 100]
    for (int n : {2, 3, 5}) {
        const Geometry g = Geometry::of_dimension(n);
        const auto w = [&](double r) { return 1.0 / (r * c_function_simplified(g, r)); };
        for (int k = 0; k <= 2; ++k) {
            const double h = 1e-3;
            const auto dk = [&](double r) -> double {
                if (k == 0)
                    return std::abs(w(r));
                if (k == 1)
                    return std::abs((w(r + h) - w(r - h)) / (2.0 * h));
                return std::abs((w(r + h) - 2.0 * w(r) + w(r - h)) / (h * h));
            };
            const double lo = dk(2.0), hi = dk(100.0);
            const double slope = std::log(hi / lo) / std::log(100.0 / 2.0);
            CHECK(slope < (n - 3) / 2.0 - k + 0.15);
        }
    }
}

TEST_CASE("plancherel density: origin values and positivity") {
    CHECK(plancherel_density(Geometry::of_dimension(3), 0.0)
          == doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-12));
    CHECK(plancherel_density(Geometry::of_dimension(2), 0.0)
          == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
    for (int n = 2; n <= 9; ++n) {
        const Geometry g = Geometry::of_dimension(n);
        for (double r : {0.0, 0.3, 1.0, 7.7, 300.0}) {
            const double v = plancherel_density(g, r);
            CHECK(v > 0.0);
            CHECK(v == plancherel_density(g, -r)); // even
        }
    }
}

TEST_CASE("plancherel density growth (1+r)^{n-1}") {
    for (int n = 2; n <= 5; ++n) {
        const Geometry g = Geometry::of_dimension(n);
        double c_fit = 0.0;
        for (double r = 0.0; r <= 1000.0; r += 2.5)
            c_fit = std::max(c_fit, plancherel_density(g, r) / std::pow(1.0 + r, n - 1.0));
        // with the fitted constant, recheck on a shifted grid
        for (double r = 1.25; r <= 1000.0; r += 2.5)
            CHECK(plancherel_density(g, r) <= 1.0001 * c_fit * std::pow(1.0 + r, n - 1.0));
    }
}

TEST_CASE("plancherel density derivative symbol bounds") {
    // |d^k mu| <= const (1+r)^{n-1-k}: the normalized ratio must not grow with r
    for (int n : {2, 3, 4, 5}) {
        const Geometry g = Geometry::of_dimension(n);
        for (int k : {1, 2}) {
            const double h = 1e-3;
            const auto dk = [&](double r) -> double {
                if (k == 1)
                    return std::abs((plancherel_density(g, r + h)
                                     - plancherel_density(g, r - h)) / (2.0 * h));
                return std::abs((plancherel_density(g, r + h) - 2.0 * plancherel_density(g, r)
                                 + plancherel_density(g, r - h)) / (h * h));
            };
            double early = 0.0, late = 0.0;
            for (double r = 1.0; r <= 100.0; r *= 1.5)
                early = std::max(early, dk(r) / std::pow(1.0 + r, n - 1.0 - k));
            for (double r = 200.0; r <= 1000.0; r *= 1.5)
                late = std::max(late, dk(r) / std::pow(1.0 + r, n - 1.0 - k));
            CHECK(late <= 1.25 * early + 1e-12);
        }
    }
}

TEST_CASE("hc_coefficients: seeds, parity zeros, and the m = 1 value") {
    const Geometry g = Geometry::of_dimension(3);
    const double r = 1.3;
    const HCCoefficients hc = hc_coefficients(g, r, 12);
    CHECK(hc.values[0] == cdouble(1.0, 0.0));
    CHECK(hc.ode_values[0] == cdouble(1.0, 0.0));
    // Gamma_2(r) = -(3 - ir)/(1 - ir) in both families
    const cdouble want = -(cdouble(3.0, -r)) / cdouble(1.0, -r);
    CHECK(std::abs(hc.values[1] - want) < 1e-14);
    CHECK(std::abs(hc.ode_values[1] - want) < 1e-14);
}

TEST_CASE("hc_coefficients: algebraic split is exact") {
    for (int n : {2, 3, 5}) {
        const Geometry g = Geometry::of_dimension(n);
        for (double r : {0.4, 2.0, 31.0}) {
            const HCCoefficients hc = hc_coefficients(g, r, 40);
            for (int m = 1; m <= 40; ++m) {
                const cdouble split = cdouble(hc.split_c[m], 0.0) + hc.split_tilde[m];
                CHECK(std::abs(hc.values[m] - split) <= 1e-12 * std::max(1.0, std::abs(split)));
            }
        }
    }
}

TEST_CASE("hc_coefficients: bare and equation-derived families diverge from m = 2") {
    const Geometry g = Geometry::of_dimension(3);
    const HCCoefficients hc = hc_coefficients(g, 1.0, 10);
    CHECK(std::abs(hc.values[2] - hc.ode_values[2]) > 1e-3);
    CHECK(hc.printed_vs_ode_max_dev > 1e-3);
}

TEST_CASE("hc_coefficients growth exponents (reported, not asserted)") {
    // C_{n,m} stays bounded; |tilde Gamma_{2m}(r)| * r stays polynomial in m.
    const Geometry g = Geometry::of_dimension(3);
    double c_max = 0.0;
    double fitted_nu2 = 0.0;
    for (double r : {1.0, 10.0, 100.0}) {
        const HCCoefficients hc = hc_coefficients(g, r, 200);
        for (int m = 1; m <= 200; ++m) {
            c_max = std::max(c_max, std::abs(hc.split_c[m]));
            if (m >= 2) {
                const double v = std::abs(hc.split_tilde[m]) * r;
                fitted_nu2 = std::max(fitted_nu2, std::log(v + 1e-300) / std::log(double(m)));
            }
        }
    }
    MESSAGE("fitted nu1 bound (max |C_{n,m}|): " << c_max);
    MESSAGE("fitted nu2 (max log_m of |tilde| r): " << fitted_nu2);
    CHECK(c_max < 10.0);
    CHECK(fitted_nu2 < 4.0);
}

TEST_CASE("hc_series: trivial cap and tail indicator") {
    const Geometry g = Geometry::of_dimension(2);
    const HCSeriesResult r0 = hc_series(g, 1.0, 4.0, 0);
    CHECK(std::abs(r0.value - std::exp(cdouble(-2.0 * 4.0, 1.0 * 4.0))) < 1e-15);
    const HCSeriesResult r10 = hc_series(g, 1.0, 10.0, 10);
    const HCSeriesResult r40 = hc_series(g, 1.0, 10.0, 40);
    CHECK(std::abs(r10.value - r40.value) <= 1e-10 * std::abs(r40.value));
    CHECK(r40.truncation_ok);
}

TEST_CASE("hc_series reproduces the Jacobi function through the expansion") {
    // phi_r(s) = c(r) Phi_r(s) + c(-r) Phi_{-r}(s); two independent routes
    for (int n : {2, 3, 4, 5}) {
        const Geometry g = Geometry::of_dimension(n);
        const JacobiParams p(n / 2.0 - 1.0, n / 2.0);
        for (double r : {0.5, 1.0, 3.0}) {
            for (double s : {2.0, 4.0}) {
                const cdouble lhs = c_function_raw(g, r) * hc_series(g, r, s, 40).value
                    + c_function_raw(g, -r) * hc_series(g, -r, s, 40).value;
                const cdouble phi = jacobi_phi(p, r, s);
                CHECK(std::abs(lhs - phi) <= 1e-8 * std::abs(phi));
            }
        }
    }
}

TEST_CASE("mu_c consistency: constancy of mu |c(2r)|^2") {
    {
        const Geometry g = Geometry::of_dimension(3);
        const MuCConsistency mc = mu_c_consistency(g, {0.1, 1.0, 10.0, 50.0});
        CHECK(mc.spread < 1e-10);
        MESSAGE("n=3 recorded constant mu|c|^2 = " << mc.constant
                << " (pi * const = " << mc.constant * kPi << ")");
    }
    {
        const Geometry g = Geometry::of_dimension(2);
        const MuCConsistency mc = mu_c_consistency(g, {0.5, 5.0, 50.0});
        CHECK(mc.spread < 1e-10);
    }
}

TEST_CASE("mu_c consistency input validation") {
    const Geometry g = Geometry::of_dimension(3);
    CHECK_THROWS_AS((void)mu_c_consistency(g, {}), invalid_argument_error);
    CHECK_THROWS_AS((void)mu_c_consistency(g, {1.0, -2.0}), invalid_argument_error);
}
