#pragma once

// Vacuum energies of confined charged fields in a uniform magnetic field
// perpendicular to the plates (d = 3).  The Landau-level sums reduce to a
// Bessel-K1 double series for the scalar and to I_pk integrals with an
// alternating inner sum for the MIT fermion.

#include <cmath>
#include <stdexcept>

#include "casimir/kernel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {

struct MagneticConfig {
    double b = 1.0;     // eB * ell^2, dimensionless
    double mu = 0.0;    // m * ell
    double ell = 1.0;   // plate separation
    double big_l = 1.0; // transverse size

    void validate() const {
        // b = 0 degenerates the Landau sum to a continuum; rejected rather
        // than extrapolated.
        if (!(b > 0.0)) throw std::domain_error("MagneticConfig: b must be > 0");
        if (!(mu >= 0.0)) throw std::domain_error("MagneticConfig: mu must be >= 0");
        if (!(ell > 0.0)) throw std::domain_error("MagneticConfig: ell must be > 0");
        if (!(big_l > 0.0)) throw std::domain_error("MagneticConfig: big_l must be > 0");
    }
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846;

// sum_{k>=1} (1/k) K1(2 k m); the k = 1 term dominates for m >~ 1.
inline NumResult bessel_k1_sum(double m, const SeriesSpec& series) {
    return sum_series([m](long k) { return bessel_k(1, 2.0 * k * m) / k; }, series);
}

} // namespace detail

/// Charged-scalar vacuum energy in a magnetic field (exact double series):
///   E0 = -(eB L^2 / 2 pi^2 ell) sum_{n>=0} M_n sum_{k>=1} (1/k) K1(2 k M_n),
/// M_n = sqrt((2n+1) b + mu^2).  The outer terms decay like e^{-2 M_n}.
inline EnergyResult boson_energy_magnetic(const MagneticConfig& config, const SeriesSpec& series = {}) {
    config.validate();
    series.validate();
    EnergyResult out;
    double sum = 0.0, err = 0.0;
    bool all_converged = true;
    int small_count = 0;
    long n = 0;
    for (; n < series.max_terms; ++n) {
        const double m_n = std::sqrt((2.0 * n + 1.0) * config.b + config.mu * config.mu);
        if (2.0 * m_n > 700.0) break; // K1 underflows: tail is exactly 0 in double
        const NumResult inner = detail::bessel_k1_sum(m_n, series);
        out.evaluations += inner.evaluations;
        all_converged = all_converged && inner.converged;
        const double term = m_n * inner.value;
        sum += term;
        err += inner.error_estimate * m_n;
        if (std::abs(term) <= series.rel_tol * std::abs(sum)) {
            if (++small_count >= 3) break;
        } else {
            small_count = 0;
        }
        if (n + 1 >= series.max_terms) all_converged = false;
    }
    // e0 = E ell^3 / L^2 with eB = b / ell^2
    out.dimensionless_energy = -config.b / (2.0 * detail::pi * detail::pi) * sum;
    out.error_estimate = config.b / (2.0 * detail::pi * detail::pi) * (err + std::abs(sum) * series.rel_tol);
    out.energy = out.dimensionless_energy * config.big_l * config.big_l / std::pow(config.ell, 3);
    out.converged = all_converged;
    return out;
}

/// Strong-field closed-form asymptote for the scalar, exactly as printed:
///   E0 / L^2 ~ -(eB L^2)^{5/4} / (pi^{1/2} ell^3) e^{-2 sqrt(eB ell^2)}.
/// Returns E0 (the L^2 on the left multiplied back in).
inline double boson_strong_field_asymptote(const MagneticConfig& config) {
    config.validate();
    const double eb = config.b / (config.ell * config.ell);
    const double scale = std::pow(eb * config.big_l * config.big_l, 1.25);
    return -config.big_l * config.big_l * scale /
           (std::sqrt(detail::pi) * std::pow(config.ell, 3)) * std::exp(-2.0 * std::sqrt(config.b));
}

/// I_pk(M_p) = int_0^inf dx ((s - mu)/(s + mu))^k e^{-2 k s}, s = sqrt(x^2 + M_p^2),
/// with M_p^2 = 2 (p + 1) b + mu^2.  The bracket is evaluated in log space so
/// that its k-th power does not underflow prematurely.
inline double i_pk_integral(int p, int k, const MagneticConfig& config, const QuadratureSpec& spec = {}) {
    if (p < -1) throw std::domain_error("i_pk_integral: p must be >= -1");
    if (k < 1) throw std::domain_error("i_pk_integral: k must be >= 1");
    config.validate();
    const double m2 = 2.0 * (p + 1.0) * config.b + config.mu * config.mu;
    const double mu = config.mu;
    auto f = [m2, mu, k](double x) -> double {
        const double s = std::sqrt(x * x + m2);
        if (s <= mu) return 0.0; // only at x = 0 when M_p = mu
        const double log_ratio = std::log1p(-mu / s) - std::log1p(mu / s);
        const double e = k * log_ratio - 2.0 * k * s;
        return (e < -745.0) ? 0.0 : std::exp(e);
    };
    return integrate_semi_infinite(f, 0.0, spec).value;
}

/// MIT-fermion vacuum energy in a magnetic field:
///   E0 = -2 (eB L^2 / 2 pi^2 ell) sum'_{p>=-1} sum_{k>=1} ((-1)^{k+1}/k) I_pk(M_p),
/// the p = -1 term half-weighted.  The inner alternating sum is taken directly
/// with its remainder bound when the terms decay exponentially (M_p not small);
/// for M_p near zero the terms only decay like 1/k^2 and the sum is
/// accelerated instead.
inline EnergyResult fermion_energy_magnetic(const MagneticConfig& config, const SeriesSpec& series = {},
                                            const QuadratureSpec& spec = {}) {
    config.validate();
    series.validate();
    EnergyResult out;
    double sum = 0.0, err = 0.0;
    bool all_converged = true;
    int small_count = 0;
    for (int p = -1; p < series.max_terms; ++p) {
        const double m_p = std::sqrt(2.0 * (p + 1.0) * config.b + config.mu * config.mu);
        if (2.0 * m_p > 700.0) break;
        NumResult inner;
        if (m_p >= 0.5) {
            inner = sum_series(
                [&](long k) {
                    const double sgn = (k % 2 == 1) ? 1.0 : -1.0;
                    return sgn / k * i_pk_integral(p, static_cast<int>(k), config, spec);
                },
                series);
        } else {
            inner = sum_alternating_accelerated(
                [&](long k) { return i_pk_integral(p, static_cast<int>(k), config, spec) / k; });
        }
        out.evaluations += inner.evaluations;
        all_converged = all_converged && inner.converged;
        const double weight = (p == -1) ? 0.5 : 1.0;
        const double term = weight * inner.value;
        sum += term;
        err += weight * inner.error_estimate;
        if (std::abs(term) <= series.rel_tol * std::abs(sum)) {
            if (++small_count >= 3) break;
        } else {
            small_count = 0;
        }
        if (p + 1 >= series.max_terms) all_converged = false;
    }
    // e0 = E ell^3 / L^2 = -(b / pi^2) * sum
    out.dimensionless_energy = -config.b / (detail::pi * detail::pi) * sum;
    out.error_estimate = config.b / (detail::pi * detail::pi) * (err + std::abs(sum) * series.rel_tol);
    out.energy = out.dimensionless_energy * config.big_l * config.big_l / std::pow(config.ell, 3);
    out.converged = all_converged;
    return out;
}

} // namespace casimir
