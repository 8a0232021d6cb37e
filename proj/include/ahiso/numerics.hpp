#pragma once

// Self-contained numerical kernel: adaptive Gauss-Kronrod quadrature (finite
// and improper), an embedded explicit Runge-Kutta pair with dense output,
// bracketed root finding, finite differences and log-log order fitting.
// Everything here is a pure function of its inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ahiso/errors.hpp"

namespace ahiso {

inline constexpr double kPi = 3.14159265358979323846;

// Process-wide defaults; the CLI's --abs-tol / --rel-tol override these.
inline double default_abs_tol = 1e-10;
inline double default_rel_tol = 1e-10;

struct Tolerances {
    double abs_tol = default_abs_tol;
    double rel_tol = default_rel_tol;
    std::int64_t max_evals = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // absolute
    std::int64_t evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights for nodes 1, 3, 5, 7 of the Kronrod set.
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GkEstimate {
    double kronrod;
    double error;
};

template <class F>
GkEstimate gauss_kronrod_15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_mid = f(mid);
    if (!std::isfinite(f_mid))
        throw NonFiniteValue("integrate: non-finite integrand at x=" + std::to_string(mid));
    double k15 = kKronrodWeights[7] * f_mid;
    double g7 = kGaussWeights[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fp = f(mid + dx);
        const double fm = f(mid - dx);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NonFiniteValue("integrate: non-finite integrand near x=" + std::to_string(mid));
        k15 += kKronrodWeights[i] * (fp + fm);
        if (i % 2 == 1)
            g7 += kGaussWeights[i / 2] * (fp + fm);
    }
    k15 *= half;
    g7 *= half;
    const double diff = std::fabs(k15 - g7);
    // QUADPACK-style sharpened estimate.
    double err = diff;
    if (diff > 0.0) {
        const double sharpened = std::pow(200.0 * diff, 1.5);
        if (sharpened < diff)
            err = sharpened;
    }
    return {k15, err};
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

} // namespace detail

/// Adaptive quadrature of f over the finite interval [a, b].
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const Tolerances& tol = {}) {
    if (!(a < b))
        throw DomainError("integrate: requires a < b");
    std::int64_t evals = 0;
    auto eval_segment = [&](double lo, double hi) {
        evals += 15;
        auto est = detail::gauss_kronrod_15(f, lo, hi);
        return detail::Segment{lo, hi, est.kronrod, est.error};
    };
    std::priority_queue<detail::Segment> queue;
    queue.push(eval_segment(a, b));
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    while (total_error > std::max(tol.abs_tol, tol.rel_tol * std::fabs(total_value))) {
        if (evals + 30 > tol.max_evals)
            throw BudgetExhausted("integrate: budget exhausted (" +
                                  std::to_string(tol.max_evals) + " evaluations)");
        detail::Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval is at machine resolution; accept its estimate.
            queue.push(detail::Segment{worst.a, worst.b, worst.value, 0.0});
            total_error -= worst.error;
            continue;
        }
        detail::Segment left = eval_segment(worst.a, mid);
        detail::Segment right = eval_segment(mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    return {total_value, total_error, evals};
}

/// Quadrature of f over [a, infinity) via the substitution s = a + u/(1-u),
/// u in [0, 1). The integrand must decay at least like s^-2.
template <class F>
QuadratureResult integrate_to_infinity(F&& f, double a, const Tolerances& tol = {}) {
    auto mapped = [&](double u) {
        const double one_minus = 1.0 - u;
        const double s = a + u / one_minus;
        const double value = f(s);
        if (!std::isfinite(value))
            throw NonFiniteValue("integrate_to_infinity: non-finite integrand at s=" +
                                 std::to_string(s));
        return value / (one_minus * one_minus);
    };
    // Divergence shows up as the transformed integrand growing like
    // (1-u)^-1 or worse as u -> 1. Probe (1-u)*|g(u)| at three tail points:
    // for any integrand with at least s^-2 - epsilon decay it tends to zero.
    {
        const double h6 = std::fabs(mapped(1.0 - 1e-6)) * 1e-6;
        const double h9 = std::fabs(mapped(1.0 - 1e-9)) * 1e-9;
        const double h12 = std::fabs(mapped(1.0 - 1e-12)) * 1e-12;
        if (h12 > 1e-8 && h12 >= 0.5 * h9 && h9 >= 0.5 * h6)
            throw DivergenceDetected("integrate_to_infinity: tail estimate not shrinking");
    }
    return integrate(mapped, 0.0, 1.0, tol);
}

using OdeState = std::vector<double>;
using OdeRhs = std::function<void(double t, const OdeState& y, OdeState& dy)>;

/// Dense-output trajectory produced by solve_ode. Piecewise cubic Hermite
/// interpolation between accepted steps.
class OdeTrajectory {
public:
    OdeTrajectory(std::vector<double> ts, std::vector<OdeState> ys,
                  std::vector<OdeState> dys)
        : ts_(std::move(ts)), ys_(std::move(ys)), dys_(std::move(dys)) {}

    double t_front() const { return ts_.front(); }
    double t_back() const { return ts_.back(); }
    std::size_t dimension() const { return ys_.front().size(); }
    std::size_t steps() const { return ts_.size() - 1; }

    OdeState operator()(double t) const {
        OdeState out(dimension());
        evaluate(t, out);
        return out;
    }

    /// Single-component query.
    double value(double t, std::size_t component = 0) const {
        OdeState out(dimension());
        evaluate(t, out);
        return out[component];
    }

private:
    void evaluate(double t, OdeState& out) const {
        const bool fwd = ts_.back() >= ts_.front();
        const double lo = fwd ? ts_.front() : ts_.back();
        const double hi = fwd ? ts_.back() : ts_.front();
        const double pad = 1e-9 * (1.0 + std::fabs(hi - lo));
        if (t < lo - pad || t > hi + pad)
            throw DomainError("trajectory: query time outside [t0, t1]");
        t = std::clamp(t, lo, hi);
        std::size_t idx;
        if (fwd) {
            idx = std::upper_bound(ts_.begin(), ts_.end(), t) - ts_.begin();
        } else {
            idx = std::upper_bound(ts_.begin(), ts_.end(), t, std::greater<>()) - ts_.begin();
        }
        idx = std::clamp<std::size_t>(idx, 1, ts_.size() - 1);
        const double t0 = ts_[idx - 1], t1 = ts_[idx];
        const double h = t1 - t0;
        const double x = (h != 0.0) ? (t - t0) / h : 0.0;
        const double x2 = x * x, x3 = x2 * x;
        const double h00 = 2 * x3 - 3 * x2 + 1;
        const double h10 = x3 - 2 * x2 + x;
        const double h01 = -2 * x3 + 3 * x2;
        const double h11 = x3 - x2;
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = h00 * ys_[idx - 1][k] + h10 * h * dys_[idx - 1][k] +
                     h01 * ys_[idx][k] + h11 * h * dys_[idx][k];
        }
    }

    std::vector<double> ts_;
    std::vector<OdeState> ys_;
    std::vector<OdeState> dys_;
};

/// Adaptive Dormand-Prince 5(4) integration of y' = rhs(t, y) from t0 to t1.
inline OdeTrajectory solve_ode(const OdeRhs& rhs, double t0, const OdeState& y0,
                               double t1, const Tolerances& tol = {}) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    const std::size_t n = y0.size();
    const double direction = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::fabs(t1 - t0);
    if (span == 0.0)
        return OdeTrajectory({t0, t1}, {y0, y0}, {OdeState(n, 0.0), OdeState(n, 0.0)});

    std::vector<double> ts{t0};
    std::vector<OdeState> ys{y0};
    std::vector<OdeState> dys;

    OdeState y = y0, k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
    double t = t0;
    rhs(t, y, k1);
    dys.push_back(k1);
    std::int64_t evals = 1;

    double h = direction * std::min(span, std::max(1e-6 * span, 1e-4));
    const double h_min = 16.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::fabs(t0), std::fabs(t1));

    auto check_finite = [&](const OdeState& state) {
        for (double v : state)
            if (!std::isfinite(v))
                throw NonFiniteValue("solve_ode: non-finite state at t=" + std::to_string(t));
    };

    while (direction * (t1 - t) > 0.0) {
        if (direction * (t + h - t1) > 0.0)
            h = t1 - t;
        if (std::fabs(h) < std::max(h_min, 1e-14 * span))
            throw StepUnderflow("solve_ode: step underflow at t=" + std::to_string(t));
        if (evals + 6 > tol.max_evals)
            throw BudgetExhausted("solve_ode: budget exhausted");

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                  b6 * k6[i]);
        rhs(t + h, ynew, k7);
        evals += 6;
        check_finite(ynew);

        double err_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double err_i = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                      e6 * k6[i] + e7 * k7[i]);
            const double scale = tol.abs_tol +
                                 tol.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err_norm = std::max(err_norm, std::fabs(err_i) / scale);
        }

        if (err_norm <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7; // FSAL
            ts.push_back(t);
            ys.push_back(y);
            dys.push_back(k1);
        }
        const double factor = (err_norm > 0.0)
                                  ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0)
                                  : 5.0;
        h *= factor;
    }
    return OdeTrajectory(std::move(ts), std::move(ys), std::move(dys));
}

/// Scalar convenience overload.
inline OdeTrajectory solve_ode(const std::function<double(double, double)>& rhs,
                               double t0, double y0, double t1,
                               const Tolerances& tol = {}) {
    OdeRhs wrapped = [&rhs](double t, const OdeState& y, OdeState& dy) {
        dy[0] = rhs(t, y[0]);
    };
    return solve_ode(wrapped, t0, OdeState{y0}, t1, tol);
}

/// Bracketed root finding: bisection with secant acceleration. Requires a
/// sign change on [lo, hi]; returns x with bracket width below tolerance.
template <class F>
double find_root(F&& f, double lo, double hi, const Tolerances& tol = {}) {
    if (!(lo < hi))
        throw DomainError("find_root: requires lo < hi");
    double f_lo = f(lo), f_hi = f(hi);
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi))
        throw NonFiniteValue("find_root: non-finite value at bracket endpoint");
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (f_lo * f_hi > 0.0)
        throw NoSignChange("find_root: no sign change on bracket");
    std::int64_t evals = 2;
    while (hi - lo > tol.abs_tol + tol.rel_tol * std::fabs(0.5 * (lo + hi))) {
        if (evals >= tol.max_evals)
            throw BudgetExhausted("find_root: budget exhausted");
        double x;
        // Secant through the bracket; fall back to bisection when the
        // secant point is outside or barely inside.
        const double denom = f_hi - f_lo;
        if (denom != 0.0) {
            x = hi - f_hi * (hi - lo) / denom;
            const double margin = 0.01 * (hi - lo);
            if (!(x > lo + margin && x < hi - margin))
                x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        const double f_x = f(x);
        ++evals;
        if (!std::isfinite(f_x))
            throw NonFiniteValue("find_root: non-finite value at x=" + std::to_string(x));
        if (f_x == 0.0) return x;
        if (f_lo * f_x < 0.0) {
            hi = x;
            f_hi = f_x;
        } else {
            lo = x;
            f_lo = f_x;
        }
    }
    // Return the endpoint with the smaller residual.
    return std::fabs(f_lo) <= std::fabs(f_hi) ? lo : hi;
}

/// Central finite difference (f(x+h) - f(x-h)) / 2h.
template <class F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Least-squares slope of log(ys) against log(xs).
inline double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 3)
        throw InsufficientData("fit_log_slope: needs at least 3 matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw DomainError("fit_log_slope: data must be strictly positive");
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace ahiso
