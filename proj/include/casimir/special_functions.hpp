#pragma once

// Self-contained special functions used by the slab-vacuum models:
// modified Bessel K0/K1, polylogarithms Li2/Li3 on [0,1], and the
// Gamma function at integer and half-integer arguments.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace casimir {

struct FnAccuracy {
    double rel_tol = 1e-12;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1e-3))
            throw std::domain_error("FnAccuracy: rel_tol must lie in (0, 1e-3)");
    }
};

namespace detail {

inline constexpr double euler_gamma = 0.5772156649015328606;

// Ascending series, A&S 9.6.11-9.6.13. Accurate for x <= ~2.
inline double bessel_k_series(int order, double x) {
    const double q = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    if (order == 0) {
        // K0 = -(ln(x/2)+gamma) I0 + sum_{k>=1} H_k q^k/(k!)^2
        double i0 = 1.0, term = 1.0, corr = 0.0, hk = 0.0;
        for (int k = 1; k < 60; ++k) {
            term *= q / (static_cast<double>(k) * k);
            i0 += term;
            hk += 1.0 / k;
            corr += term * hk;
            if (term < 1e-18 * i0) break;
        }
        return -(lg + euler_gamma) * i0 + corr;
    }
    // K1 = 1/x + ln(x/2) I1 - (x/4) sum_k [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
    double i1 = 0.5 * x, term = 0.5 * x, s = 0.0, sterm = 1.0;
    double psi_a = -euler_gamma, psi_b = 1.0 - euler_gamma;
    s = (psi_a + psi_b) * sterm;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        i1 += term;
        sterm *= q / (static_cast<double>(k) * (k + 1));
        psi_a += 1.0 / k;
        psi_b += 1.0 / (k + 1);
        s += (psi_a + psi_b) * sterm;
        if (term < 1e-18 * i1 && sterm < 1e-18) break;
    }
    return 1.0 / x + lg * i1 - 0.25 * x * s;
}

// Trapezoidal evaluation of K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
// The integrand is analytic in a strip of half-width pi/2, so the trapezoid
// error behaves like exp(x - pi^2/h); h is chosen from that bound.
inline double bessel_k_trapezoid(int order, double x) {
    const double h = 9.8696044010893586 / (x + 45.0);
    const double tmax = std::acosh(1.0 + 60.0 / x);
    double sum = 0.5 * std::exp(-x); // t = 0 endpoint, cosh(0) = 1
    for (double t = h; t <= tmax; t += h) {
        const double ct = std::cosh(t);
        sum += std::exp(-x * ct) * (order == 0 ? 1.0 : ct);
    }
    return sum * h;
}

// Asymptotic expansion, valid for x >= ~16 at double precision.
inline double bessel_k_asymptotic(int order, double x) {
    const double mu = 4.0 * order * order;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        const double next = term * num / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break; // divergent tail
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(1.5707963267948966 / x) * std::exp(-x) * sum;
}

} // namespace detail

/// Modified Bessel function K_nu(x) for nu in {0,1}, x > 0.
/// For x > 700 the result underflows; 0 is returned and *underflow set.
inline double bessel_k(int order, double x, bool* underflow = nullptr) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("bessel_k: order must be 0 or 1");
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: requires x > 0");
    if (underflow) *underflow = false;
    if (x > 700.0) {
        if (underflow) *underflow = true;
        return 0.0;
    }
    if (x <= 1.0) return detail::bessel_k_series(order, x);
    if (x < 16.0) return detail::bessel_k_trapezoid(order, x);
    return detail::bessel_k_asymptotic(order, x);
}

namespace detail {

// Direct defining series; converges geometrically for x <= 1/2.
inline double polylog_series(int order, double x) {
    double sum = 0.0, xk = 1.0;
    for (int k = 1; k < 200; ++k) {
        xk *= x;
        const double t = (order == 2) ? xk / (static_cast<double>(k) * k)
                                      : xk / (static_cast<double>(k) * k * k);
        sum += t;
        if (t < 1e-17 * sum) break;
    }
    return sum;
}

// Series usable for any |z| < 1 (needed for the Li3 argument 1 - 1/x).
inline double polylog3_series_any(double z) {
    double sum = 0.0, zk = 1.0;
    for (int k = 1; k < 40000; ++k) {
        zk *= z;
        const double t = zk / (static_cast<double>(k) * k * k);
        sum += t;
        if (std::abs(t) < 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

} // namespace detail

inline constexpr double zeta2 = 1.6449340668482264365; // pi^2/6
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = 1.0823232337111381916; // pi^4/90

/// Polylogarithm Li_s(x) for s in {2,3} and x in [0,1].
inline double polylog(int order, double x) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("polylog: order must be 2 or 3");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("polylog: requires x in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return (order == 2) ? zeta2 : zeta3;
    if (x <= 0.5) return detail::polylog_series(order, x);
    const double lx = std::log(x);
    const double l1mx = std::log1p(-x);
    if (order == 2) {
        // Li2(x) = pi^2/6 - ln(x)ln(1-x) - Li2(1-x)
        return zeta2 - lx * l1mx - detail::polylog_series(2, 1.0 - x);
    }
    // Li3(x) + Li3(1-x) + Li3(1-1/x)
    //   = zeta(3) + ln^3(x)/6 + (pi^2/6)ln(x) - ln^2(x)ln(1-x)/2
    const double rhs = zeta3 + lx * lx * lx / 6.0 + zeta2 * lx - 0.5 * lx * lx * l1mx;
    return rhs - detail::polylog_series(3, 1.0 - x) - detail::polylog3_series_any(1.0 - 1.0 / x);
}

/// Gamma(two_a / 2) by exact recursion from Gamma(1/2) = sqrt(pi), Gamma(1) = 1.
inline double gamma_half(int two_a) {
    if (two_a <= 0)
        throw std::domain_error("gamma_half: requires two_a >= 1");
    double g = (two_a % 2 == 0) ? 1.0 : 1.7724538509055160273; // Gamma(1) or Gamma(1/2)
    double z = (two_a % 2 == 0) ? 1.0 : 0.5;
    while (2.0 * z + 0.5 < two_a) {
        g *= z;
        z += 1.0;
    }
    return g;
}

} // namespace casimir
