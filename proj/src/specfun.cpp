// Complex log-Gamma, restricted-domain Gauss 2F1, and Jacobi functions.
//
// log_gamma uses the 15-coefficient Lanczos rational approximation
// (g = 607/128) on Re z >= 1/2 and the forward recurrence
// log G(z) = log G(z+m) - sum log(z+j) to reach that half-plane, which keeps
// the result on the branch that is real on the positive axis without
// evaluating log sin.
//
// 2F1 is only needed at nonpositive real argument z = -sinh^2 t, where the
// Pfaff transform w = z/(z-1) = tanh^2 t maps into [0,1) and the series
// converges geometrically for bounded t.

#include "hyperdirac/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace hyperdirac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836; // log(2 pi)

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cdouble lanczos_right_half(cdouble z) {
    // valid for Re z >= 0.5
    cdouble sum = kLanczosCoef[0];
    for (int k = 1; k < 15; ++k)
        sum += kLanczosCoef[k] / (z - 1.0 + static_cast<double>(k));
    cdouble base = z + kLanczosG - 0.5;
    return 0.5 * kLog2Pi + (z - 0.5) * std::log(base) - base + std::log(sum);
}

// Neumaier-compensated complex accumulator.
struct CompensatedSum {
    cdouble sum{0.0, 0.0};
    cdouble comp{0.0, 0.0};

    void add(cdouble term) {
        const cdouble t = sum + term;
        const double ar = std::abs(sum.real()), br = std::abs(term.real());
        const double ai = std::abs(sum.imag()), bi = std::abs(term.imag());
        double cr = (ar >= br) ? (sum.real() - t.real()) + term.real()
                               : (term.real() - t.real()) + sum.real();
        double ci = (ai >= bi) ? (sum.imag() - t.imag()) + term.imag()
                               : (term.imag() - t.imag()) + sum.imag();
        comp += cdouble(cr, ci);
        sum = t;
    }

    cdouble value() const { return sum + comp; }
};

} // namespace

cdouble log_gamma(cdouble z) {
    // pole detection near nonpositive integers
    const double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - cdouble(k, 0.0)) < 1e-14)
        throw pole_error("log_gamma: pole at nonpositive integer");

    if (z.real() >= 0.5)
        return lanczos_right_half(z);

    const int m = static_cast<int>(std::ceil(0.5 - z.real()));
    cdouble shift(0.0, 0.0);
    for (int j = 0; j < m; ++j)
        shift += std::log(z + static_cast<double>(j));
    return lanczos_right_half(z + static_cast<double>(m)) - shift;
}

cdouble hyp2f1(cdouble a, cdouble b, cdouble c, double z, int term_cap) {
    if (z > 0.0)
        throw invalid_argument_error("hyp2f1: argument must satisfy z <= 0");
    {
        const double kc = std::round(c.real());
        if (kc <= 0.0 && std::abs(c - cdouble(kc, 0.0)) < 1e-12)
            throw invalid_argument_error("hyp2f1: c is a nonpositive integer");
    }
    if (z == 0.0)
        return 1.0;

    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; w), w = z/(z-1) in (0,1)
    const double w = z / (z - 1.0);
    const cdouble a2 = c - b;

    CompensatedSum acc;
    cdouble term(1.0, 0.0);
    acc.add(term);
    int small_streak = 0;
    for (int n = 0; n < term_cap; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (a2 + dn) * (w / ((c + dn) * (dn + 1.0)));
        acc.add(term);
        if (std::abs(term) < 1e-16 * std::abs(acc.value())) {
            if (++small_streak >= 3) {
                const cdouble prefactor = std::exp(-a * std::log1p(-z));
                return prefactor * acc.value();
            }
        } else {
            small_streak = 0;
        }
    }
    throw numerics_error("hyp2f1: series did not converge within term cap");
}

namespace detail {

cdouble jacobi_c_function(const JacobiParams& p, double lambda) {
    if (lambda == 0.0)
        throw pole_error("jacobi_c_function: pole at lambda = 0");
    const double rho = p.rho();
    const cdouble il(0.0, lambda);
    const cdouble lg = (rho - il) * std::log(2.0)
        + log_gamma(cdouble(p.alpha + 1.0, 0.0))
        + log_gamma(il)
        - log_gamma((rho + il) / 2.0)
        - log_gamma((p.alpha - p.beta + 1.0 + il) / 2.0);
    return std::exp(lg);
}

std::vector<cdouble> hc_expansion_coefficients(const JacobiParams& p, double lambda, int m_max) {
    const double rho = p.rho();
    const double ta = 2.0 * p.alpha + 1.0;
    const double tb = 2.0 * p.beta + 1.0;
    const cdouble il(0.0, lambda);

    std::vector<cdouble> coef(static_cast<size_t>(m_max) + 1);
    coef[0] = 1.0;
    for (int m = 1; m <= m_max; ++m) {
        cdouble s(0.0, 0.0);
        for (int j = 0; j < m; ++j) {
            const double w = ta + (((m - j) % 2 == 0) ? tb : -tb);
            if (w == 0.0)
                continue;
            s += w * (2.0 * j + rho - il) * coef[j];
        }
        coef[m] = s / (2.0 * m * (static_cast<double>(m) - il));
    }
    return coef;
}

} // namespace detail

namespace {

// Pfaff-series branch is safe when the lost-digit scale lambda*tanh(t) and
// the term count (driven by w = tanh^2 t) are both small.
bool pfaff_ok(double lambda, double t) {
    const double th = std::tanh(t);
    return std::abs(lambda) * th <= 4.0 && th * th <= 0.90;
}

constexpr double kLambdaMin = 2e-3;
constexpr int kCoefCap = 4000;

} // namespace

JacobiEvaluator::JacobiEvaluator(const JacobiParams& p, double lambda)
    : params_(p), lambda_(std::abs(lambda)) { // even in lambda
    if (lambda_ >= kLambdaMin) {
        main_ = HCData{};
        main_->lambda = lambda_;
        main_->c = detail::jacobi_c_function(params_, lambda_);
    } else {
        small_nodes_.resize(3);
        for (int k = 0; k < 3; ++k) {
            small_nodes_[k].lambda = kLambdaMin * (k + 1);
            small_nodes_[k].c = detail::jacobi_c_function(params_, small_nodes_[k].lambda);
        }
    }
}

double JacobiEvaluator::pfaff_eval(double t) const {
    const double rho = params_.rho();
    const cdouble a(rho / 2.0, lambda_ / 2.0);
    const cdouble a2((params_.alpha - params_.beta + 1.0) / 2.0, lambda_ / 2.0);
    const double cpar = params_.alpha + 1.0;
    const double th = std::tanh(t);
    const double w = th * th;

    CompensatedSum acc;
    cdouble term(1.0, 0.0);
    acc.add(term);
    int small_streak = 0;
    for (int n = 0; n < 100000; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (a2 + dn) * (w / ((cpar + dn) * (dn + 1.0)));
        acc.add(term);
        if (std::abs(term) < 1e-16 * std::abs(acc.value())) {
            if (++small_streak >= 3)
                break;
        } else {
            small_streak = 0;
        }
    }
    // prefactor (cosh t)^{-(rho + i lambda)}
    const double lc = std::log(std::cosh(t));
    const cdouble pref = std::exp(-cdouble(rho, lambda_) * lc);
    return (pref * acc.value()).real();
}

void JacobiEvaluator::grow(HCData& d, int m_needed) {
    if (static_cast<int>(d.coef.size()) > m_needed)
        return;
    int target = std::max(m_needed + 1, 32);
    target = std::min(target, kCoefCap);
    d.coef = detail::hc_expansion_coefficients(params_, d.lambda, target - 1);
}

double JacobiEvaluator::hc_eval(HCData& d, double t) {
    const double rho = params_.rho();
    grow(d, 48);

    CompensatedSum acc;
    const double q = std::exp(-2.0 * t);
    double qm = 1.0;
    int m = 0;
    int small_streak = 0;
    for (;;) {
        if (m >= static_cast<int>(d.coef.size())) {
            if (m >= kCoefCap)
                throw numerics_error("jacobi_phi: expansion did not converge (t too small)");
            grow(d, std::min(2 * m, kCoefCap - 1));
        }
        const cdouble term = d.coef[m] * qm;
        acc.add(term);
        const double mag = std::abs(term);
        if (m >= 8 && mag <= 1e-17 * std::abs(acc.value())) {
            if (++small_streak >= 2)
                break;
        } else {
            small_streak = 0;
        }
        qm *= q;
        ++m;
    }
    // phi = 2 Re[c(lambda) e^{(i lambda - rho)t} Phi]
    const cdouble phase = std::exp(cdouble(-rho * t, d.lambda * t));
    return 2.0 * (d.c * phase * acc.value()).real();
}

double JacobiEvaluator::eval(double t) {
    t = std::abs(t); // even in t
    if (t == 0.0)
        return 1.0;
    if (pfaff_ok(lambda_, t))
        return pfaff_eval(t);
    if (main_)
        return hc_eval(*main_, t);
    // lambda below the expansion floor: quadratic interpolation in lambda^2
    // through the three prepared nodes (phi is even and entire in lambda).
    double y[3], x[3];
    for (int k = 0; k < 3; ++k) {
        y[k] = hc_eval(small_nodes_[k], t);
        x[k] = small_nodes_[k].lambda * small_nodes_[k].lambda;
    }
    const double x0 = lambda_ * lambda_;
    double out = 0.0;
    for (int k = 0; k < 3; ++k) {
        double lk = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != k)
                lk *= (x0 - x[j]) / (x[k] - x[j]);
        out += y[k] * lk;
    }
    return out;
}

cdouble jacobi_phi(const JacobiParams& p, double lambda, double t) {
    if (t < 0.0)
        throw invalid_argument_error("jacobi_phi: t must be >= 0");
    JacobiEvaluator ev(p, lambda);
    return cdouble(ev.eval(t), 0.0);
}

} // namespace hyperdirac
