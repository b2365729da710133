#pragma once

// Boundary kernels and the master regularised-energy integral.
//
// A boundary condition on the two planes defines K(omega) = K1 + K2, with K1
// the exponentially decaying part and K2 the growing part.  The regularised
// slab energy is a single integral of ln(1 + K1/K2) against the phase-space
// weight omega (omega^2 - mu^2)^{d/2 - 1}; no mode enumeration is needed.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {

struct BoundaryKernel {
    std::function<double(double)> k1; // decaying part
    std::function<double(double)> k2; // growing part
    int statistics_sign = +1;         // +1 boson, -1 fermion
    double degeneracy = 1.0;          // alpha(d) for bosons, C(d) for fermions
};

struct SlabConfig {
    int d = 3;          // spatial dimensions
    double ell = 1.0;   // plate separation
    double big_l = 1.0; // transverse size L, L >> ell
    double mu = 0.0;    // m * ell

    void validate() const {
        if (d < 1) throw std::domain_error("SlabConfig: d must be >= 1");
        if (!(ell > 0.0)) throw std::domain_error("SlabConfig: ell must be > 0");
        if (!(big_l > 0.0)) throw std::domain_error("SlabConfig: big_l must be > 0");
        if (!(mu >= 0.0)) throw std::domain_error("SlabConfig: mu must be >= 0");
    }
};

struct EnergyResult {
    double energy = 0.0;               // units 1/length, hbar = c = 1
    double dimensionless_energy = 0.0; // e0 = energy * ell^d / L^{d-1}
    double error_estimate = 0.0;       // on the dimensionless value
    long evaluations = 0;
    bool converged = false;
};

/// ln(1 + k1(omega)/k2(omega)) in cancellation-safe form.
inline double log_ratio(const BoundaryKernel& kernel, double omega) {
    const double r = kernel.k1(omega) / kernel.k2(omega);
    if (r <= -1.0) throw std::domain_error("log_ratio: 1 + K1/K2 must be positive");
    return std::log1p(r);
}

/// Massless Dirichlet-type scalar kernel: K(omega) = sinh(omega)/omega split
/// as K1 = -e^{-omega}/(2 omega), K2 = e^{omega}/(2 omega), so that
/// 1 + K1/K2 = 1 - e^{-2 omega}.
inline BoundaryKernel dirichlet_scalar_kernel() {
    BoundaryKernel k;
    k.k1 = [](double w) { return -std::exp(-w) / (2.0 * w); };
    k.k2 = [](double w) { return std::exp(w) / (2.0 * w); };
    k.statistics_sign = +1;
    k.degeneracy = 1.0;
    return k;
}

/// MIT slab-bag fermion kernel: K(omega) = mu sinh(omega)/omega + cosh(omega),
/// K1 = (1 - mu/omega) e^{-omega}/2, K2 = (1 + mu/omega) e^{omega}/2, giving
/// 1 + K1/K2 = 1 + ((omega - mu)/(omega + mu)) e^{-2 omega}.
/// The spinor degeneracy C(d) defaults to 2^{floor((d+1)/2)} / 2; callers with
/// other conventions override `degeneracy`.
inline BoundaryKernel mit_fermion_kernel(double mu, double degeneracy = 2.0) {
    if (!(mu >= 0.0)) throw std::domain_error("mit_fermion_kernel: mu must be >= 0");
    BoundaryKernel k;
    k.k1 = [mu](double w) { return 0.5 * (1.0 - mu / w) * std::exp(-w); };
    k.k2 = [mu](double w) { return 0.5 * (1.0 + mu / w) * std::exp(w); };
    k.statistics_sign = -1;
    k.degeneracy = degeneracy;
    return k;
}

/// Default fermion degeneracy C(d) = (number of spinor components) / 2.
inline double default_fermion_degeneracy(int d) {
    return std::pow(2.0, (d + 1) / 2) / 2.0;
}

/// Regularised vacuum energy of a field between two parallel planes.
///
/// Evaluates
///   e0 = s * g / (2^{d - f} pi^{d/2} Gamma(d/2))
///        * int_mu^inf domega omega (omega^2 - mu^2)^{d/2-1} ln(1 + K1/K2)
/// with s the statistics sign, g the degeneracy and f = 1 for fermions
/// (the fermion prefactor carries 2^{d-1} rather than 2^d).
/// The substitution omega = mu + u^2 makes the integrand smooth for every
/// d >= 1, including the d = 1 inverse-square-root endpoint.
inline EnergyResult casimir_energy_slab(const BoundaryKernel& kernel, const SlabConfig& config,
                                        const QuadratureSpec& spec = {}) {
    config.validate();
    const int d = config.d;
    const double mu = config.mu;
    auto integrand = [&kernel, d, mu](double u) -> double {
        const double u2 = u * u;
        const double omega = mu + u2;
        const double lr = log_ratio(kernel, omega);
        if (lr == 0.0) return 0.0;
        // omega (omega^2 - mu^2)^{d/2-1} domega  ->  2 u omega (u^2(u^2+2mu))^{d/2-1} du
        return 2.0 * u * omega * std::pow(u2 * (u2 + 2.0 * mu), 0.5 * d - 1.0) * lr;
    };
    const NumResult integral = integrate_semi_infinite(integrand, 0.0, spec);

    const bool fermion = kernel.statistics_sign < 0;
    const double prefactor = kernel.statistics_sign * kernel.degeneracy /
                             (std::pow(2.0, fermion ? d - 1 : d) *
                              std::pow(3.14159265358979323846, 0.5 * d) * gamma_half(d));

    EnergyResult out;
    out.dimensionless_energy = prefactor * integral.value;
    out.energy = out.dimensionless_energy * std::pow(config.big_l, d - 1) / std::pow(config.ell, d);
    out.error_estimate = std::abs(prefactor) * integral.error_estimate;
    out.evaluations = integral.evaluations;
    out.converged = integral.converged;
    return out;
}

} // namespace casimir
