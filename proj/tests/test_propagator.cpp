#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperdirac/propagator.hpp"
#include "hyperdirac/spherical.hpp"

using namespace hyperdirac;

TEST_CASE("cutoff profile") {
    const CutoffSpec c0{CutoffKind::chi0, 1.0};
    const CutoffSpec ci{CutoffKind::chi_inf, 1.0};
    CHECK(cutoff(c0, 0.0) == 1.0);
    CHECK(cutoff(c0, 0.4) == 1.0);
    CHECK(cutoff(c0, 1.2) == 0.0);
    CHECK(cutoff(c0, 0.73) + cutoff(ci, 0.73) == doctest::Approx(1.0).epsilon(1e-15));
    // monotone on the transition
    double prev = 1.0;
    for (double x = 0.5; x <= 1.0; x += 0.01) {
        const double v = cutoff(c0, x);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    // scale moves the transition: chi0(|t| r) vanishes for r >= 1/|t|
    const CutoffSpec scaled{CutoffKind::chi0, 4.0};
    CHECK(cutoff(scaled, 0.3) == 0.0);
    CHECK(cutoff(scaled, 0.1) == 1.0);
}

TEST_CASE("kernel argument validation") {
    const Geometry g = Geometry::of_dimension(3);
    const SmoothingOrder th = SmoothingOrder::critical(g);
    CHECK_THROWS_AS((void)kernel_piece(g, th, KernelPiece::I0, 0.0, 1.0),
                    invalid_argument_error);
    CHECK_THROWS_AS((void)kernel_piece(Geometry::of_dimension(7), th, KernelPiece::I0, 1.0, 1.0),
                    invalid_argument_error);
    // tail pieces demand the critical line or above
    CHECK_THROWS_AS((void)kernel_piece(g, SmoothingOrder(0.5), KernelPiece::Iinf_plus, 1.0, 1.0),
                    invalid_argument_error);
    // I0 accepts any theta
    CHECK_NOTHROW((void)kernel_piece(g, SmoothingOrder(0.5), KernelPiece::I0, 1.0, 1.0));
}

TEST_CASE("Iinf_minus vanishes for |t| >= 2") {
    const Geometry g = Geometry::of_dimension(3);
    const KernelSample k = kernel_piece(g, SmoothingOrder::critical(g),
                                        KernelPiece::Iinf_minus, 3.0, 1.0);
    CHECK(k.value == cdouble(0.0, 0.0));
    CHECK(k.est_error == 0.0);
}

TEST_CASE("kernel conjugation under t -> -t for real theta") {
    const Geometry g = Geometry::of_dimension(2);
    const SmoothingOrder th(1.5);
    for (KernelPiece piece : {KernelPiece::I0, KernelPiece::Iinf_minus, KernelPiece::Iinf_plus}) {
        const KernelSample a = kernel_piece(g, th, piece, 2.0, 1.0);
        const KernelSample b = kernel_piece(g, th, piece, -2.0, 1.0);
        CHECK(std::abs(b.value - std::conj(a.value))
              <= 1e-12 * std::abs(a.value) + a.est_error + b.est_error);
    }
}

TEST_CASE("partition of unity: pieces sum to the single-integral total") {
    for (int n : {2, 3}) {
        const Geometry g = Geometry::of_dimension(n);
        const SmoothingOrder th = SmoothingOrder::critical(g);
        for (double t : {0.6, 1.5, 3.0}) {
            for (double s : {0.4, 1.0, 2.5}) {
                const KernelSample total = kernel_total(g, th, t, s);
                cdouble sum(0.0, 0.0);
                double err = 0.0;
                for (KernelPiece piece :
                     {KernelPiece::I0, KernelPiece::Iinf_minus, KernelPiece::Iinf_plus}) {
                    const KernelSample k = kernel_piece(g, th, piece, t, s);
                    sum += k.value;
                    err += k.est_error;
                }
                CHECK(std::abs(sum - total.value)
                      <= 2.0 * (err + total.est_error) + 1e-12 * std::abs(total.value));
            }
        }
    }
}

TEST_CASE("I0 bounded by the ground function") {
    for (int n : {2, 3}) {
        const Geometry g = Geometry::of_dimension(n);
        const SmoothingOrder th = SmoothingOrder::critical(g);
        double c_fit = 0.0;
        for (double t : {0.5, 2.0, 8.0})
            for (double s : {0.2, 1.0, 3.0, 8.0}) {
                const KernelSample k = kernel_piece(g, th, KernelPiece::I0, t, s);
                c_fit = std::max(c_fit, std::abs(k.value) / ground_spherical(g, s));
            }
        MESSAGE("n=" << n << " fitted |I0|/phi_0 bound: " << c_fit);
        CHECK(c_fit < 10.0);
    }
}

TEST_CASE("kernel long-time and short-time magnitude bounds") {
    const Geometry g = Geometry::of_dimension(3);
    const SmoothingOrder th = SmoothingOrder::critical(g);
    SUBCASE("long-time: |K_{t,0}| <= C phi_0 (1+s) / t at t = 20") {
        double c_fit = 0.0;
        for (double s : {0.5, 1.0, 2.0}) {
            const KernelSample k = kernel_piece(g, th, KernelPiece::I0, 20.0, s);
            c_fit = std::max(c_fit, std::abs(k.value) * 20.0
                             / (ground_spherical(g, s) * (1.0 + s)));
        }
        MESSAGE("fitted long-time constant: " << c_fit);
        CHECK(c_fit < 10.0);
    }
    SUBCASE("short-time: |K_{t,inf}| <= C e^{-(n-1)s/2} t^{-(n-1)/2} at t = 0.05") {
        const double t = 0.05, s = 1.0;
        cdouble vinf = kernel_piece(g, th, KernelPiece::Iinf_minus, t, s).value
            + kernel_piece(g, th, KernelPiece::Iinf_plus, t, s).value;
        const double bound_shape = std::exp(-(g.n - 1) / 2.0 * s) * std::pow(t, -(g.n - 1) / 2.0);
        const double c_fit = std::abs(vinf) / bound_shape;
        MESSAGE("fitted short-time constant: " << c_fit);
        CHECK(c_fit < 10.0);
    }
}

TEST_CASE("epsilon-extrapolation stability") {
    const Geometry g = Geometry::of_dimension(2);
    const SmoothingOrder th = SmoothingOrder::critical(g);
    KernelOptions opts;
    const KernelSample a = kernel_piece(g, th, KernelPiece::Iinf_plus, 1.5, 0.7,
                                        KernelComponent::sigma_sum, opts);
    opts.eps0 = 0.05;
    const KernelSample b = kernel_piece(g, th, KernelPiece::Iinf_plus, 1.5, 0.7,
                                        KernelComponent::sigma_sum, opts);
    CHECK(std::abs(a.value - b.value) < 3.0 * (a.est_error + b.est_error));
}

TEST_CASE("odd-dimension component selection") {
    const Geometry g = Geometry::of_dimension(3);
    const SmoothingOrder th = SmoothingOrder::critical(g);
    const double t = 1.5, s = 0.7;
    const KernelSample pp = kernel_piece(g, th, KernelPiece::I0, t, s, KernelComponent::odd_pp);
    const KernelSample mp = kernel_piece(g, th, KernelPiece::I0, t, s, KernelComponent::odd_mp);
    const KernelSample sum = kernel_piece(g, th, KernelPiece::I0, t, s);
    // the sigma sum cancels the odd parts
    CHECK(std::abs(pp.value + mp.value - sum.value)
          <= 1e-10 * std::abs(sum.value) + pp.est_error + mp.est_error + sum.est_error);
    // per-component selection on even n is rejected
    CHECK_THROWS_AS((void)kernel_piece(Geometry::of_dimension(2), SmoothingOrder(1.5),
                                       KernelPiece::I0, t, s, KernelComponent::odd_pp),
                    invalid_argument_error);
}

TEST_CASE("decay_fit recovers exact power laws") {
    std::vector<std::pair<double, double>> pl, three;
    for (double t = 1.0; t <= 100.0; t *= 1.5) {
        pl.emplace_back(t, 1.0 / t);
        three.emplace_back(t, 3.0 * std::pow(t, -1.5));
    }
    const DecayFit f1 = decay_fit(pl, 0.5, 200.0);
    CHECK(f1.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(f1.rsquared == doctest::Approx(1.0).epsilon(1e-12));
    const DecayFit f2 = decay_fit(three, 0.5, 200.0);
    CHECK(f2.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(f2.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("decay_fit validation") {
    std::vector<std::pair<double, double>> few = {{1, 1}, {2, 0.5}, {3, 0.3}, {4, 0.25}};
    CHECK_THROWS_AS((void)decay_fit(few, 0.5, 10.0), invalid_argument_error);
    std::vector<std::pair<double, double>> bad = {{1, 1}, {2, 0.5}, {3, 0.3}, {4, 0.25},
                                                  {5, 0.0}};
    CHECK_THROWS_AS((void)decay_fit(bad, 0.5, 10.0), invalid_argument_error);
    CHECK_THROWS_AS((void)decay_fit(bad, 10.0, 0.5), invalid_argument_error);
}

TEST_CASE("decay_fit on an I0 long-time run (n=3 nine-point grid)") {
    const Geometry g = Geometry::of_dimension(3);
    const SmoothingOrder th(2.0);
    std::vector<std::pair<double, double>> samples;
    for (int k = 0; k < 9; ++k) {
        const double t = 8.0 * std::pow(128.0 / 8.0, k / 8.0);
        samples.emplace_back(t, std::abs(kernel_piece(g, th, KernelPiece::I0, t, 1.0).value));
    }
    const DecayFit fit = decay_fit(samples, 8.0, 128.0);
    MESSAGE("n=3 nine-point I0 slope: " << fit.slope);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.15));
}

TEST_CASE("ks_norm_bound: model profiles") {
    for (int n : {2, 3}) {
        const Geometry g = Geometry::of_dimension(n);
        const auto model = [&](double s) { return (1.0 + s) * std::exp(-(n - 1) / 2.0 * s); };
        SUBCASE("finite for q = 4") {
            const double v = ks_norm_bound(g, model, 4.0);
            CHECK(std::isfinite(v));
            CHECK(v > 0.0);
        }
        SUBCASE("divergent at q = 2") {
            CHECK_THROWS_AS((void)ks_norm_bound(g, model, 2.0), numerics_error);
        }
    }
    const Geometry g3 = Geometry::of_dimension(3);
    CHECK(ks_norm_bound(g3, [](double) { return 0.0; }, 4.0) == 0.0);
}
