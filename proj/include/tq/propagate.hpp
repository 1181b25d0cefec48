#pragma once

#include "tq/liouvillian.hpp"

namespace tq {

// exp(L t) applied to rho0. Result is returned in rho0's basis and must
// satisfy the density-matrix invariants to 1e-8 (else NumericalError).
DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& lv, double t);
DensityMatrix propagate(const DensityMatrix& rho0, const ReservoirParams& p, double t);

// Independent check integrator: classic fixed-step 4th-order Runge-Kutta
// with step <= dt_max.
DensityMatrix propagate_rk(const DensityMatrix& rho0, const ReservoirParams& p, double t,
                           double dt_max);

// Stationary state of the generator. G < 1: the unique trace-one null vector
// (the Gibbs state, independent of rho0). G = 1: the null space is
// two-dimensional and the member with <a|rho|a> = fidelity_singlet(rho0) is
// returned. Cross-checked against propagation to t = 200/gamma0; throws
// DegeneracyError on an unexpected null-space dimension and NumericalError
// when the two routes disagree.
DensityMatrix steady_state(const ReservoirParams& p, const DensityMatrix& rho0);

}  // namespace tq
