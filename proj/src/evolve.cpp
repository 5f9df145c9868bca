// Radial spherical Fourier transform, spectral projections, half-wave
// evolution, norms, and the columnar serialization format.
//
// The transform pair is realized as dense quadrature matrices built from the
// two real kernels
//   A(r, s) = cosh(s/2) phi_{2r}^{(n/2-1, n/2)}(s/2)
//   b(r, s) = (2r/n) sinh(s/2) phi_{2r}^{(n/2, n/2-1)}(s/2)   (odd n)
// so the odd-dimension component pair is A -+ ib. Forward integrates against
// the conjugated components with the Cartan weight; inverse against the
// components with the Plancherel weight. The cross pairing makes
// inverse(forward(.)) a scalar multiple of the identity, and that scalar is
// calibrated away once per transform and frozen.

#include "hyperdirac/evolve.hpp"

#include "hyperdirac/quadrature.hpp"
#include "hyperdirac/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace hyperdirac {

namespace {

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("HYPERDIRAC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void check_uniform(const std::vector<double>& grid, const char* what) {
    if (grid.size() < 10)
        throw invalid_argument_error(std::string(what) + ": grid too small");
    const double h = grid[1] - grid[0];
    if (!(h > 0.0))
        throw invalid_argument_error(std::string(what) + ": grid must be increasing");
    for (size_t i = 1; i < grid.size(); ++i) {
        const double d = grid[i] - grid[i - 1];
        if (std::abs(d - h) > 1e-9 * h)
            throw invalid_argument_error(std::string(what) + ": grid must be uniform");
    }
}

// slot-ordered parallel loop; results land in preassigned indices so the
// outcome is independent of scheduling
template <typename Fn>
void parallel_rows(size_t n, int threads, Fn&& fn) {
    const int k = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (k == 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (int w = 0; w < k; ++w) {
        pool.emplace_back([&, w]() {
            for (size_t i = static_cast<size_t>(w); i < n; i += k)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace

std::vector<double> SphericalTransform::default_s_grid() {
    std::vector<double> g(2048);
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = 20.0 * static_cast<double>(i) / (g.size() - 1);
    return g;
}

std::vector<double> SphericalTransform::default_r_grid() {
    std::vector<double> g(4096);
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = 40.0 * static_cast<double>(i) / (g.size() - 1);
    return g;
}

SphericalTransform::SphericalTransform(const Geometry& g, std::vector<double> s_grid,
                                       std::vector<double> r_grid, int threads)
    : geom_(g), s_grid_(std::move(s_grid)), r_grid_(std::move(r_grid)) {
    check_uniform(s_grid_, "SphericalTransform s_grid");
    check_uniform(r_grid_, "SphericalTransform r_grid");

    const size_t ns = s_grid_.size();
    const size_t nr = r_grid_.size();
    const double hs = s_grid_[1] - s_grid_[0];
    const double hr = r_grid_[1] - r_grid_[0];

    ws_ = detail::gregory_weights(ns, hs);
    for (size_t j = 0; j < ns; ++j)
        ws_[j] *= std::pow(2.0 * std::sinh(s_grid_[j]), geom_.n - 1.0);

    wr_ = detail::gregory_weights(nr, hr);
    for (size_t i = 0; i < nr; ++i)
        wr_[i] *= plancherel_density(geom_, r_grid_[i]);

    const bool odd = geom_.parity == Parity::odd;
    a_.assign(nr * ns, 0.0);
    if (odd)
        b_.assign(nr * ns, 0.0);

    const JacobiParams p1(geom_.n / 2.0 - 1.0, geom_.n / 2.0);
    const JacobiParams p2(geom_.n / 2.0, geom_.n / 2.0 - 1.0);
    const int nthreads = resolve_threads(threads);
    parallel_rows(nr, nthreads, [&](size_t i) {
        const double r = r_grid_[i];
        JacobiEvaluator ev1(p1, 2.0 * r);
        std::optional<JacobiEvaluator> ev2;
        if (odd)
            ev2.emplace(p2, 2.0 * r);
        double* arow = a_.data() + i * ns;
        double* brow = odd ? b_.data() + i * ns : nullptr;
        for (size_t j = 0; j < ns; ++j) {
            const double t = s_grid_[j] / 2.0;
            arow[j] = std::cosh(t) * ev1.eval(t);
            if (odd)
                brow[j] = (2.0 * r / geom_.n) * std::sinh(t) * ev2->eval(t);
        }
    });

    // round-trip calibration on a reference Gaussian, then freeze
    RadialProfile ref;
    ref.geometry = geom_;
    ref.s_grid = s_grid_;
    ref.values.resize(ns);
    for (size_t j = 0; j < ns; ++j) {
        const double d = s_grid_[j] - 1.0;
        ref.values[j] = std::exp(-4.0 * d * d);
    }
    const RadialProfile back = inverse_raw(forward_raw(ref));
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < ns; ++j) {
        num += (back.values[j] * std::conj(ref.values[j])).real() * ws_[j];
        den += std::norm(ref.values[j]) * ws_[j];
    }
    const double c = num / den;
    if (!(c > 0.0) || !std::isfinite(c))
        throw numerics_error("SphericalTransform: calibration failed");
    n_fwd_ = 1.0 / c;
}

SpectralCoefficients SphericalTransform::forward_raw(const RadialProfile& f) const {
    if (f.s_grid.size() != s_grid_.size() || f.s_grid.front() != s_grid_.front()
        || f.s_grid.back() != s_grid_.back())
        throw invalid_argument_error("forward: profile grid does not match transform grid");
    if (f.values.size() != s_grid_.size())
        throw invalid_argument_error("forward: profile values/grid size mismatch");
    // oscillation test: >= 8 points per period of phi(r_max, .)
    const double hs = s_grid_[1] - s_grid_[0];
    if (r_grid_.back() * hs > 2.0 * 3.14159265358979323846 / 8.0)
        throw numerics_error("forward: s-grid undersamples phi(r_max, .)");

    const size_t ns = s_grid_.size();
    const size_t nr = r_grid_.size();
    const bool odd = geom_.parity == Parity::odd;

    SpectralCoefficients h;
    h.geometry = geom_;
    h.r_grid = r_grid_;
    h.plus.assign(nr, cdouble(0.0, 0.0));
    if (odd)
        h.minus.emplace(nr, cdouble(0.0, 0.0));

    std::vector<cdouble> fw(ns);
    for (size_t j = 0; j < ns; ++j)
        fw[j] = f.values[j] * ws_[j];

    for (size_t i = 0; i < nr; ++i) {
        const double* arow = a_.data() + i * ns;
        detail::KahanSum accA;
        for (size_t j = 0; j < ns; ++j)
            accA.add(arow[j] * fw[j]);
        const cdouble ia = accA.value();
        if (!odd) {
            h.plus[i] = ia;
        } else {
            const double* brow = b_.data() + i * ns;
            detail::KahanSum accB;
            for (size_t j = 0; j < ns; ++j)
                accB.add(brow[j] * fw[j]);
            const cdouble ib = accB.value();
            // conjugated components: conj(A - ib) = A + ib, conj(A + ib) = A - ib
            h.plus[i] = ia + cdouble(0.0, 1.0) * ib;
            (*h.minus)[i] = ia - cdouble(0.0, 1.0) * ib;
        }
    }
    return h;
}

RadialProfile SphericalTransform::inverse_raw(const SpectralCoefficients& h) const {
    if (h.r_grid.size() != r_grid_.size() || h.r_grid.front() != r_grid_.front()
        || h.r_grid.back() != r_grid_.back())
        throw invalid_argument_error("inverse: spectrum grid does not match transform grid");
    const bool odd = geom_.parity == Parity::odd;
    if (odd && !h.minus)
        throw invalid_argument_error("inverse: odd dimension needs the (plus, minus) pair");

    const size_t ns = s_grid_.size();
    const size_t nr = r_grid_.size();

    // tail check: |h(R_max)| mu(R_max) below 1e-10 of the peak
    double peak = 0.0;
    for (size_t i = 0; i < nr; ++i) {
        double m = std::abs(h.plus[i]);
        if (odd)
            m = std::max(m, std::abs((*h.minus)[i]));
        peak = std::max(peak, m * plancherel_density(geom_, r_grid_[i]));
    }
    {
        double edge = std::abs(h.plus[nr - 1]);
        if (odd)
            edge = std::max(edge, std::abs((*h.minus)[nr - 1]));
        edge *= plancherel_density(geom_, r_grid_[nr - 1]);
        if (peak > 0.0 && edge > 1e-10 * peak)
            throw numerics_error("inverse: spectrum not resolved by R_max (tail truncation)");
    }

    RadialProfile f;
    f.geometry = geom_;
    f.s_grid = s_grid_;
    f.values.assign(ns, cdouble(0.0, 0.0));

    std::vector<cdouble> hp(nr), hm;
    for (size_t i = 0; i < nr; ++i)
        hp[i] = h.plus[i] * wr_[i];
    if (odd) {
        hm.resize(nr);
        for (size_t i = 0; i < nr; ++i)
            hm[i] = (*h.minus)[i] * wr_[i];
    }

    std::vector<detail::KahanSum> acc(ns);
    for (size_t i = 0; i < nr; ++i) {
        const double* arow = a_.data() + i * ns;
        if (!odd) {
            const cdouble c = hp[i];
            for (size_t j = 0; j < ns; ++j)
                acc[j].add(c * arow[j]);
        } else {
            const double* brow = b_.data() + i * ns;
            // h_plus pairs with (A - ib), h_minus with (A + ib)
            const cdouble cp = hp[i];
            const cdouble cm = hm[i];
            const cdouble ca = cp + cm;
            const cdouble cb = cdouble(0.0, 1.0) * (cm - cp);
            for (size_t j = 0; j < ns; ++j)
                acc[j].add(ca * arow[j] + cb * brow[j]);
        }
    }
    for (size_t j = 0; j < ns; ++j)
        f.values[j] = acc[j].value();
    return f;
}

SpectralCoefficients SphericalTransform::forward(const RadialProfile& f) const {
    SpectralCoefficients h = forward_raw(f);
    for (auto& v : h.plus)
        v *= n_fwd_;
    if (h.minus)
        for (auto& v : *h.minus)
            v *= n_fwd_;
    return h;
}

RadialProfile SphericalTransform::inverse(const SpectralCoefficients& h) const {
    return inverse_raw(h);
}

namespace {

struct TransformKey {
    int n;
    size_t ns, nr;
    double s0, s1, r0, r1;

    bool operator<(const TransformKey& o) const {
        return std::tie(n, ns, nr, s0, s1, r0, r1)
            < std::tie(o.n, o.ns, o.nr, o.s0, o.s1, o.r0, o.r1);
    }
};

std::map<TransformKey, std::unique_ptr<SphericalTransform>>& transform_cache() {
    static std::map<TransformKey, std::unique_ptr<SphericalTransform>> cache;
    return cache;
}

std::mutex& transform_mutex() {
    static std::mutex m;
    return m;
}

const SphericalTransform& cached_transform(const Geometry& g, const std::vector<double>& s_grid,
                                           const std::vector<double>& r_grid) {
    TransformKey key{g.n, s_grid.size(), r_grid.size(),
                     s_grid.front(), s_grid.back(), r_grid.front(), r_grid.back()};
    std::lock_guard<std::mutex> lock(transform_mutex());
    auto& cache = transform_cache();
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SphericalTransform>(g, s_grid, r_grid)).first;
    return *it->second;
}

} // namespace

const SphericalTransform& SphericalTransform::shared(const Geometry& g) {
    return cached_transform(g, default_s_grid(), default_r_grid());
}

SpectralCoefficients forward_transform(const RadialProfile& f) {
    return cached_transform(f.geometry, f.s_grid, SphericalTransform::default_r_grid())
        .forward(f);
}

RadialProfile inverse_transform(const SpectralCoefficients& h, const std::vector<double>& s_grid) {
    return cached_transform(h.geometry, s_grid, h.r_grid).inverse(h);
}

SpectralCoefficients spectral_project(const SpectralCoefficients& h, SpectralSign sign) {
    if (h.geometry.parity != Parity::odd)
        throw invalid_argument_error(
            "spectral_project: only the odd-dimension spectrum splits into +/- parts");
    SpectralCoefficients out = h;
    if (sign == SpectralSign::plus) {
        std::fill(out.minus->begin(), out.minus->end(), cdouble(0.0, 0.0));
    } else {
        std::fill(out.plus.begin(), out.plus.end(), cdouble(0.0, 0.0));
    }
    return out;
}

SpectralCoefficients evolve_half_wave(const SpectralCoefficients& h, double t,
                                      const SmoothingOrder& theta) {
    SpectralCoefficients out = h;
    const cdouble th = theta.as_complex();
    for (size_t i = 0; i < out.r_grid.size(); ++i) {
        const double r = out.r_grid[i];
        const cdouble mult = std::exp(cdouble(0.0, t * r)
                                      - 0.5 * th * std::log(r * r + h.geometry.r0));
        out.plus[i] *= mult;
        if (out.minus)
            (*out.minus)[i] *= mult;
    }
    return out;
}

double norm_track(const RadialProfile& f, double q) {
    if (f.values.size() != f.s_grid.size())
        throw invalid_argument_error("norm_track: values/grid size mismatch");
    if (q == std::numeric_limits<double>::infinity()) {
        double m = 0.0;
        for (const auto& v : f.values)
            m = std::max(m, std::abs(v));
        return m;
    }
    if (!(q >= 1.0))
        throw invalid_argument_error("norm_track: q must be in [1, inf]");
    check_uniform(f.s_grid, "norm_track grid");
    const auto w = detail::gregory_weights(f.s_grid.size(), f.s_grid[1] - f.s_grid[0]);
    double acc = 0.0;
    for (size_t j = 0; j < f.s_grid.size(); ++j) {
        const double cartan = std::pow(2.0 * std::sinh(f.s_grid[j]), f.geometry.n - 1.0);
        acc += std::pow(std::abs(f.values[j]), q) * cartan * w[j];
    }
    return std::pow(acc, 1.0 / q);
}

double spectral_norm(const SpectralCoefficients& h) {
    check_uniform(h.r_grid, "spectral_norm grid");
    const auto w = detail::gregory_weights(h.r_grid.size(), h.r_grid[1] - h.r_grid[0]);
    double acc = 0.0;
    for (size_t i = 0; i < h.r_grid.size(); ++i) {
        double m2 = std::norm(h.plus[i]);
        if (h.minus)
            m2 += std::norm((*h.minus)[i]);
        acc += m2 * plancherel_density(h.geometry, h.r_grid[i]) * w[i];
    }
    return std::sqrt(acc);
}

namespace {

void write_double(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

const char* parity_name(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

struct Header {
    std::string kind;
    int n = 0;
};

Header parse_header(std::istream& is, const char* expected_kind) {
    std::string line;
    if (!std::getline(is, line))
        throw invalid_argument_error("serialization: empty input");
    Header h;
    char kind[64] = {0};
    char parity[16] = {0};
    if (std::sscanf(line.c_str(), "# %63s v1 n=%d parity=%15s", kind, &h.n, parity) != 3)
        throw invalid_argument_error("serialization: bad header line");
    h.kind = kind;
    if (h.kind != expected_kind)
        throw invalid_argument_error("serialization: unexpected payload kind");
    return h;
}

} // namespace

void write_profile(std::ostream& os, const RadialProfile& f) {
    os << "# hyperdirac-profile v1 n=" << f.geometry.n
       << " parity=" << parity_name(f.geometry.parity) << "\n";
    for (size_t j = 0; j < f.s_grid.size(); ++j) {
        write_double(os, f.s_grid[j]);
        os << ',';
        write_double(os, f.values[j].real());
        os << ',';
        write_double(os, f.values[j].imag());
        os << '\n';
    }
}

RadialProfile read_profile(std::istream& is) {
    const Header h = parse_header(is, "hyperdirac-profile");
    RadialProfile f;
    f.geometry = Geometry::of_dimension(h.n);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        double s, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &s, &re, &im) != 3)
            throw invalid_argument_error("read_profile: bad row: " + line);
        f.s_grid.push_back(s);
        f.values.emplace_back(re, im);
    }
    return f;
}

void write_spectrum(std::ostream& os, const SpectralCoefficients& h) {
    os << "# hyperdirac-spectrum v1 n=" << h.geometry.n
       << " parity=" << parity_name(h.geometry.parity) << "\n";
    for (size_t i = 0; i < h.r_grid.size(); ++i) {
        write_double(os, h.r_grid[i]);
        os << ',';
        write_double(os, h.plus[i].real());
        os << ',';
        write_double(os, h.plus[i].imag());
        if (h.minus) {
            os << ',';
            write_double(os, (*h.minus)[i].real());
            os << ',';
            write_double(os, (*h.minus)[i].imag());
        }
        os << '\n';
    }
}

SpectralCoefficients read_spectrum(std::istream& is) {
    const Header hd = parse_header(is, "hyperdirac-spectrum");
    SpectralCoefficients h;
    h.geometry = Geometry::of_dimension(hd.n);
    const bool odd = h.geometry.parity == Parity::odd;
    if (odd)
        h.minus.emplace();
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        double r, pre, pim, mre = 0.0, mim = 0.0;
        const int got = std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r, &pre, &pim, &mre, &mim);
        if (got != (odd ? 5 : 3))
            throw invalid_argument_error("read_spectrum: bad row: " + line);
        h.r_grid.push_back(r);
        h.plus.emplace_back(pre, pim);
        if (odd)
            h.minus->emplace_back(mre, mim);
    }
    return h;
}

} // namespace hyperdirac
