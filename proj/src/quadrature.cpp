#include "hyperdirac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperdirac {
namespace detail {

namespace {

// QUADPACK dqk15 abscissae/weights on [-1, 1].
constexpr double kXGK[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWGK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

} // namespace

QuadResult gk15(const std::function<cdouble(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    cdouble fv[15];
    fv[7] = f(c);
    for (int k = 0; k < 7; ++k) {
        const double dx = h * kXGK[k];
        fv[k] = f(c - dx);
        fv[14 - k] = f(c + dx);
    }

    cdouble kron = kWGK[7] * fv[7];
    for (int k = 0; k < 7; ++k)
        kron += kWGK[k] * (fv[k] + fv[14 - k]);

    cdouble gauss = kWG[3] * fv[7];
    for (int k = 0; k < 3; ++k)
        gauss += kWG[k] * (fv[2 * k + 1] + fv[13 - 2 * k]);

    QuadResult out;
    out.value = kron * h;
    out.est_error = std::abs(kron - gauss) * std::abs(h);
    out.evaluations = 15;
    return out;
}

namespace {

void adaptive_rec(const std::function<cdouble(double)>& f, double a, double b,
                  double rel_tol, double abs_tol_per_unit, int depth, int max_depth,
                  KahanSum& acc, double& err_acc, long& evals) {
    const QuadResult r = gk15(f, a, b);
    evals += r.evaluations;
    const double tol = std::max(abs_tol_per_unit * (b - a), rel_tol * std::abs(r.value));
    if (r.est_error <= tol || depth >= max_depth) {
        acc.add(r.value);
        err_acc += r.est_error;
        return;
    }
    const double c = 0.5 * (a + b);
    adaptive_rec(f, a, c, rel_tol, abs_tol_per_unit, depth + 1, max_depth, acc, err_acc, evals);
    adaptive_rec(f, c, b, rel_tol, abs_tol_per_unit, depth + 1, max_depth, acc, err_acc, evals);
}

} // namespace

QuadResult adaptive_gk(const std::function<cdouble(double)>& f, double a, double b,
                       double rel_tol, double abs_tol, int max_depth) {
    QuadResult out;
    if (!(b > a))
        return out;
    KahanSum acc;
    double err = 0.0;
    long evals = 0;
    adaptive_rec(f, a, b, rel_tol, abs_tol / (b - a), 0, max_depth, acc, err, evals);
    out.value = acc.value();
    out.est_error = err;
    out.evaluations = evals;
    return out;
}

cdouble neville_at_zero(const std::vector<double>& x, const std::vector<cdouble>& y, int deg) {
    if (deg + 1 > static_cast<int>(x.size()) || deg + 1 > static_cast<int>(y.size()))
        throw std::logic_error("neville_at_zero: not enough points");
    std::vector<cdouble> t(y.begin(), y.begin() + deg + 1);
    for (int lvl = 1; lvl <= deg; ++lvl)
        for (int i = 0; i + lvl <= deg; ++i)
            t[i] = (x[i + lvl] * t[i] - x[i] * t[i + 1]) / (x[i + lvl] - x[i]);
    return t[0];
}

std::vector<double> gregory_weights(size_t n, double h) {
    if (n < 10)
        throw std::invalid_argument("gregory_weights: need at least 10 points");
    std::vector<double> w(n, h);
    // trapezoid corrected through fourth differences at both ends
    static const double edge[5] = {
        95.0 / 288.0, 317.0 / 240.0, 23.0 / 30.0, 793.0 / 720.0, 157.0 / 160.0,
    };
    for (int k = 0; k < 5; ++k) {
        w[k] = edge[k] * h;
        w[n - 1 - k] = edge[k] * h;
    }
    return w;
}

} // namespace detail
} // namespace hyperdirac
