#pragma once

// Adaptive Gauss-Kronrod integration on finite and semi-infinite intervals,
// inverse-square-root endpoint singularities removed by analytic substitution,
// and convergence-controlled summation of infinite series.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace casimir {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_refinements = 30;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureSpec: rel_tol must be > 0");
        if (!(abs_tol >= 0.0)) throw std::domain_error("QuadratureSpec: abs_tol must be >= 0");
        if (max_refinements < 1) throw std::domain_error("QuadratureSpec: max_refinements must be >= 1");
    }
};

struct SeriesSpec {
    double rel_tol = 1e-12;
    long max_terms = 10000;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::domain_error("SeriesSpec: rel_tol must be > 0");
        if (max_terms < 1) throw std::domain_error("SeriesSpec: max_terms must be >= 1");
    }
};

struct NumResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

enum class SingularEnd { left, right };

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK values).
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss-7 weights for nodes 1,3,5,7 of the list above.
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b;
    double value;   // K15 estimate
    double error;   // |K15 - G7|
    int depth;
    std::uint64_t seq; // insertion order, for deterministic tie-breaking
};

struct IntervalLess {
    bool operator()(const Interval& x, const Interval& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

template <class F>
inline bool gk15(const F& f, double a, double b, double& value, double& error, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fk[8];
    double k15 = 0.0, g7 = 0.0;
    {
        const double y = f(c);
        ++evals;
        if (!std::isfinite(y)) return false;
        fk[7] = y;
        k15 = gk_wk[7] * y;
        g7 = gk_wg[3] * y;
    }
    for (int i = 0; i < 7; ++i) {
        const double x = h * gk_nodes[i];
        const double y1 = f(c + x);
        const double y2 = f(c - x);
        evals += 2;
        if (!std::isfinite(y1) || !std::isfinite(y2)) return false;
        fk[i] = y1 + y2;
        k15 += gk_wk[i] * fk[i];
        if (i % 2 == 1) g7 += gk_wg[i / 2] * fk[i];
    }
    value = k15 * h;
    error = std::abs((k15 - g7) * h);
    return true;
}

// Global adaptive bisection over an initial partition.  The budget scales
// with max_refinements; per-interval depth is capped so that degenerate
// integrands terminate with converged = false instead of spinning.
template <class F>
inline NumResult adaptive_finite(const F& f, double a, double b, const QuadratureSpec& spec,
                                 int initial_subdivisions = 1) {
    spec.validate();
    NumResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Interval, std::vector<Interval>, IntervalLess> heap;
    std::uint64_t seq = 0;
    double total = 0.0, toterr = 0.0;
    const int n0 = std::max(1, initial_subdivisions);
    for (int i = 0; i < n0; ++i) {
        const double x0 = a + (b - a) * i / n0;
        const double x1 = a + (b - a) * (i + 1) / n0;
        double v, e;
        if (!gk15(f, x0, x1, v, e, res.evaluations)) {
            res.value = std::numeric_limits<double>::quiet_NaN();
            res.error_estimate = std::numeric_limits<double>::infinity();
            return res;
        }
        total += v;
        toterr += e;
        heap.push({x0, x1, v, e, 0, seq++});
    }
    const long budget = 256L * spec.max_refinements;
    long splits = 0;
    const double span = std::abs(b - a);
    while (toterr > std::max(spec.rel_tol * std::abs(total), spec.abs_tol) && splits < budget) {
        Interval top = heap.top();
        const double width = top.b - top.a;
        if (top.depth >= 52 || std::abs(width) <= 4.0 * std::numeric_limits<double>::epsilon() * span ||
            top.error <= 1e-17 * std::abs(total)) {
            break; // cannot refine further
        }
        heap.pop();
        const double m = 0.5 * (top.a + top.b);
        double v1, e1, v2, e2;
        const bool ok1 = gk15(f, top.a, m, v1, e1, res.evaluations);
        const bool ok2 = gk15(f, m, top.b, v2, e2, res.evaluations);
        if (!ok1 || !ok2) {
            res.value = std::numeric_limits<double>::quiet_NaN();
            res.error_estimate = std::numeric_limits<double>::infinity();
            return res;
        }
        total += v1 + v2 - top.value;
        toterr += e1 + e2 - top.error;
        heap.push({top.a, m, v1, e1, top.depth + 1, seq++});
        heap.push({m, top.b, v2, e2, top.depth + 1, seq++});
        ++splits;
    }
    res.value = total;
    res.error_estimate = std::max(toterr, 0.0);
    res.converged = res.error_estimate <= std::max(spec.rel_tol * std::abs(res.value), spec.abs_tol);
    return res;
}

} // namespace detail

/// Finite-interval adaptive Gauss-Kronrod integration.
template <class F>
inline NumResult integrate_finite(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
    return detail::adaptive_finite(f, a, b, spec);
}

/// Integral of f over [lower, inf) for integrands with (at least) exponential
/// decay.  The tail is mapped by x = lower + t/(1-t); the decay makes the
/// transformed integrand vanish at t = 1.  An initial partition of the unit
/// interval catches integrands whose decay scale is far from unity.
template <class F>
inline NumResult integrate_semi_infinite(const F& f, double lower, const QuadratureSpec& spec = {}) {
    auto g = [&f, lower](double t) -> double {
        if (t >= 1.0) return 0.0;
        const double om = 1.0 - t;
        const double x = lower + t / om;
        const double y = f(x);
        if (y == 0.0) return 0.0;
        return y / (om * om);
    };
    return detail::adaptive_finite(g, 0.0, 1.0, spec, 8);
}

/// Integral of f over [a, b] where f behaves like g(q)/sqrt(|q - endpoint|)
/// near the declared singular end, g smooth.  The substitution
/// q = a + (b-a) sin^2(theta) has vanishing derivative at both endpoints and
/// removes the inverse-square-root weight analytically; f is never evaluated
/// at the endpoints themselves.
template <class F>
inline NumResult integrate_sqrt_singular(const F& f, double a, double b, SingularEnd /*singular_end*/,
                                         const QuadratureSpec& spec = {}) {
    if (!(b > a)) throw std::domain_error("integrate_sqrt_singular: requires b > a");
    const double w = b - a;
    auto g = [&f, a, w](double th) -> double {
        const double s = std::sin(th);
        const double q = a + w * s * s;
        return f(q) * w * std::sin(2.0 * th);
    };
    return detail::adaptive_finite(g, 0.0, 1.5707963267948966, spec, 8);
}

/// Sum of term(k) for k = 1, 2, ...  Stops once |term| has fallen below
/// rel_tol * |partial sum| for 3 consecutive terms (guards against accidental
/// zeros of oscillatory terms).  For alternating series the error estimate is
/// the magnitude of the first omitted term.
template <class Term>
inline NumResult sum_series(const Term& term, const SeriesSpec& spec = {}) {
    spec.validate();
    NumResult res;
    double sum = 0.0;
    int small_count = 0;
    bool alternating = true;
    double prev = 0.0;
    long k = 1;
    for (; k <= spec.max_terms; ++k) {
        const double t = term(k);
        ++res.evaluations;
        if (!std::isfinite(t)) {
            res.value = std::numeric_limits<double>::quiet_NaN();
            res.error_estimate = std::numeric_limits<double>::infinity();
            return res;
        }
        sum += t;
        if (k > 1 && !(t == 0.0 || prev == 0.0 || (t > 0) != (prev > 0))) alternating = false;
        prev = t;
        if (std::abs(t) <= spec.rel_tol * std::abs(sum)) {
            if (++small_count >= 3) {
                ++k;
                break;
            }
        } else {
            small_count = 0;
        }
    }
    res.value = sum;
    res.converged = small_count >= 3;
    if (res.converged) {
        if (alternating) {
            res.error_estimate = std::abs(term(k));
            ++res.evaluations;
        } else {
            res.error_estimate = std::abs(prev);
        }
    } else {
        res.error_estimate = std::abs(prev) * 10.0;
    }
    return res;
}

/// Accelerated sum of the alternating series sum_{k>=1} (-1)^{k+1} a(k),
/// a(k) >= 0 totally monotone (Cohen-Rodriguez Villegas-Zagier).  Converges
/// like (3 + sqrt 8)^{-n}; used where the direct alternating sum would need
/// millions of terms.
template <class A>
inline NumResult sum_alternating_accelerated(const A& a, int n = 36) {
    auto run = [&a](int nn, long& evals) -> double {
        double d = std::pow(3.0 + std::sqrt(8.0), nn);
        d = 0.5 * (d + 1.0 / d);
        double b = -1.0, c = -d, s = 0.0;
        for (int k = 0; k < nn; ++k) {
            c = b - c;
            s += c * a(k + 1);
            ++evals;
            b *= (k + nn) * (k - nn) / ((k + 0.5) * (k + 1.0));
        }
        return s / d;
    };
    NumResult res;
    const double v1 = run(n, res.evaluations);
    const double v2 = run(n + 6, res.evaluations);
    res.value = v2;
    res.error_estimate = std::abs(v2 - v1) + 1e-16 * std::abs(v2);
    res.converged = true;
    return res;
}

} // namespace casimir
