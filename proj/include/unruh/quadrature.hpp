#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "unruh/errors.hpp"

namespace unruh::quad {

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& z) { return std::abs(z); }

template <class V>
struct Result {
    V value{};
    double error = 0.0;      ///< absolute error estimate
    bool converged = false;
    std::size_t evals = 0;
};

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_intervals = 2000;
};

namespace detail {

// Gauss-Kronrod 15(7) nodes and weights on [-1,1] (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F, class V>
void gk15(const F& f, double a, double b, V& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    V kron = kWgk[7] * fv[7];
    V gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    value = h * kron;
    err = abs_of(h * (kron - gauss));
    // QUADPACK-style sharpening of the raw Gauss/Kronrod difference.
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) resabs += kWgk[i] * (abs_of(fv[i]) + abs_of(fv[14 - i]));
    resabs += kWgk[7] * abs_of(fv[7]);
    resabs *= std::abs(h);
    if (resabs > 0.0 && err > 0.0)
        err = std::min(err, resabs * std::pow(200.0 * err / resabs, 1.5) + resabs * 1e-16);
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 15(7) on a union of initial segments.
/// The break list lets callers pre-split per oscillation period; adaptive
/// bisection refines from there. Value type may be real or complex.
template <class V, class F>
Result<V> integrate_segments(const F& f, const std::vector<double>& breaks,
                             const Options& opt = {}) {
    Result<V> out;
    if (breaks.size() < 2) {
        out.converged = true;
        return out;
    }
    struct Segment {
        double a, b, err;
        V val;
        std::size_t id;
        bool operator<(const Segment& o) const {
            if (err != o.err) return err < o.err;
            return id > o.id;  // deterministic tie-break
        }
    };
    std::priority_queue<Segment> heap;
    std::size_t next_id = 0;
    V total{};
    double toterr = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Segment s{breaks[i], breaks[i + 1], 0.0, V{}, next_id++};
        detail::gk15(f, s.a, s.b, s.val, s.err);
        out.evals += 15;
        total += s.val;
        toterr += s.err;
        heap.push(s);
    }
    auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * abs_of(total)); };
    while (static_cast<int>(next_id) < opt.max_intervals && toterr > target()) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment s1{worst.a, mid, 0.0, V{}, next_id++};
        Segment s2{mid, worst.b, 0.0, V{}, next_id++};
        detail::gk15(f, s1.a, s1.b, s1.val, s1.err);
        detail::gk15(f, s2.a, s2.b, s2.val, s2.err);
        out.evals += 30;
        total += (s1.val + s2.val) - worst.val;
        toterr += (s1.err + s2.err) - worst.err;
        if (toterr < 0) toterr = 0;
        heap.push(s1);
        heap.push(s2);
    }
    out.value = total;
    out.error = toterr;
    out.converged = toterr <= target() * 1.000001 + 1e-300;
    return out;
}

template <class V, class F>
Result<V> integrate(const F& f, double a, double b, const Options& opt = {}) {
    return integrate_segments<V>(f, std::vector<double>{a, b}, opt);
}

/// Splits [a,b] into segments no longer than `max_len` (at least one).
inline std::vector<double> uniform_breaks(double a, double b, double max_len, int cap = 4096) {
    const double len = b - a;
    int n = std::max(1, static_cast<int>(std::ceil(len / std::max(max_len, 1e-300))));
    n = std::min(n, cap);
    std::vector<double> breaks(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) breaks[static_cast<std::size_t>(i)] = a + len * i / n;
    breaks.back() = b;
    return breaks;
}

/// Improper integral over [lo, inf) by repeated doubling of the span.
/// Throws integrability_error when doubling does not settle.
template <class F>
Result<double> integrate_to_infinity(const F& f, double lo, double rel_tol = 1e-8,
                                     double initial_span = 8.0, int max_doublings = 40) {
    Options opt;
    opt.rel_tol = rel_tol * 0.1;
    double hi = lo + initial_span;
    Result<double> acc = integrate<double>(f, lo, hi, opt);
    for (int k = 0; k < max_doublings; ++k) {
        const double next = lo + (hi - lo) * 2.0;
        Result<double> extra = integrate<double>(f, hi, next, opt);
        acc.value += extra.value;
        acc.error += extra.error;
        acc.evals += extra.evals;
        hi = next;
        if (std::abs(extra.value) <= rel_tol * std::max(std::abs(acc.value), 1e-300) &&
            std::abs(extra.value) <= 0.5 * std::abs(acc.value) + 1e-300) {
            acc.converged = true;
            return acc;
        }
    }
    throw integrability_error("integral over semi-infinite range did not settle under doubling");
}

/// Richardson extrapolation of samples f(h0/ratio^k), k = 0..n-1, assuming
/// an expansion in integer powers of h.
struct Extrapolation {
    double limit = 0.0;
    double error = 0.0;
    std::vector<double> samples;
};

inline Extrapolation richardson(const std::vector<double>& samples, double ratio = 2.0) {
    const std::size_t n = samples.size();
    if (n == 0) throw extrapolation_error("empty extrapolation sequence", {});
    std::vector<std::vector<double>> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i].resize(i + 1);
        t[i][0] = samples[i];
        double rp = 1.0;
        for (std::size_t j = 1; j <= i; ++j) {
            rp *= ratio;
            t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (rp - 1.0);
        }
    }
    Extrapolation ex;
    ex.samples = samples;
    ex.limit = t[n - 1][n - 1];
    ex.error = (n > 1) ? std::abs(t[n - 1][n - 1] - t[n - 1][n - 2]) +
                             std::abs(t[n - 1][n - 1] - t[n - 2][n - 2]) * 0.25
                       : std::abs(ex.limit);
    return ex;
}

/// True when the sequence grows monotonically by at least `factor` over its
/// last entries, i.e. the ladder is diverging instead of settling.
inline bool looks_divergent(const std::vector<double>& samples, double factor = 1.5) {
    if (samples.size() < 3) return false;
    int grow = 0;
    for (std::size_t i = samples.size() - 3; i + 1 < samples.size(); ++i) {
        if (std::abs(samples[i + 1]) > factor * std::abs(samples[i]) &&
            std::abs(samples[i + 1]) > 1e-12)
            ++grow;
    }
    return grow == 2;
}

}  // namespace unruh::quad
