#pragma once

#include <optional>

#include "tq/concurrence.hpp"
#include "tq/density_matrix.hpp"

namespace tq {

// Reservoir temperature for the closed-form results. Accepts the full range
// beta*omega in [0, inf]; everything downstream is evaluated through
// y = e^{-beta*omega}, which keeps large-beta arithmetic exact (y underflows
// to the T = 0 limit instead of overflowing a cosh).
struct ThermalContext {
    double beta_omega;

    static ThermalContext from_beta_omega(double bw);
    static ThermalContext from_temperature(double t_over_omega);

    double y() const;                // e^{-beta*omega} in [0,1]
    double u() const;                // 1 + y + y^2 in [1,3]
    double temperature() const;      // T/omega
};

// Mixture (1-p) gibbs(beta) + p |a><a|.
struct WernerDecomposition {
    double p;
    double beta_omega;
};

// Thermal equilibrium state diag(y^2, y, y, 1)/(1+y)^2, canonical basis.
DensityMatrix gibbs_state(const ThermalContext& ctx);

// Stationary state reached from any initial state of fidelity F under the
// strongly correlated (G = 1) dynamics; canonical basis.
DensityMatrix asymptotic_state(double fidelity, const ThermalContext& ctx);

// F_beta = y/(1+y)^2: the fidelity whose asymptotic state is the Gibbs state.
double threshold_fidelity(const ThermalContext& ctx);

// p with asymptotic_state(F) = (1-p) gibbs + p |a><a|; requires F >= F_beta
// (below the threshold no such mixture exists -> NotRepresentableError).
double mixing_probability(double fidelity, const ThermalContext& ctx);

DensityMatrix werner_state(const WernerDecomposition& w);

// max(0, p - 2y/(1+y)^2 (1-p)); zero at and below p0.
Concurrence werner_concurrence(double p, const ThermalContext& ctx);
double werner_threshold_probability(const ThermalContext& ctx);  // p0 = 2y/(1+4y+y^2)

// max(0, F - 3(1-F)/(1+2 cosh beta*omega)).
Concurrence asymptotic_concurrence(double fidelity, const ThermalContext& ctx);
double entanglement_threshold_fidelity(const ThermalContext& ctx);  // F0

// T_c/omega above which fidelity-F initial states end separable; F in (0,1/2).
double critical_temperature(double fidelity);

// Pure product states with factor overlap alpha = |<phi|psi>|.
Concurrence product_asymptotic_concurrence(double alpha, const ThermalContext& ctx);
double product_critical_temperature(double alpha);  // alpha in (0,1)

// Gibbs initial state prepared at temperature T0 (fidelity < 1/4 always).
double gibbs_fidelity(double beta0_omega);
double gibbs_critical_temperature(double t0_over_omega);

// Maximally entangled family, parametrized by a and theta = theta1 - theta2.
double maxent_fidelity(double a, double theta);
double maxent_theta(double theta1, double theta2);
bool in_region_E(double a, double theta);  // F > 1/2 inside, = 1/2 on the boundary
Concurrence maxent_asymptotic_concurrence(double a, double theta,
                                          const ThermalContext& ctx);
double maxent_zero_temperature_concurrence(double a, double theta);      // C_max
double maxent_infinite_temperature_concurrence(double a, double theta);  // C_min

// Temperature at which the asymptotic state of P(a, theta) is exactly the
// reservoir's Gibbs state: finite value when F < 1/4, +inf on the F = 1/4
// curve, nullopt when F > 1/4.
std::optional<double> gibbs_return_temperature(double a, double theta);

// One-excitation X states of concurrence z: asymptotic concurrence >= z.
Concurrence xclass_asymptotic_concurrence(double z, const ThermalContext& ctx);

}  // namespace tq
