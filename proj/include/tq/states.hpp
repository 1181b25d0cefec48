#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "tq/density_matrix.hpp"

namespace tq {

// Initial-state families. Every variant constructs a valid DensityMatrix
// in the canonical basis.

struct CollectiveE {};
struct CollectiveG {};
struct CollectiveS {};
struct CollectiveA {};

// (cos(theta)|0> + e^{i phi} sin(theta)|1>) on each factor; radians.
struct Product {
    double theta_a, phi_a, theta_b, phi_b;
};

// Thermal equilibrium of the free Hamiltonian at temperature T0 (units of
// omega). T0 = 0 gives |g><g|, T0 = inf the maximally mixed state.
struct Gibbs {
    double t0_over_omega;
};

// Maximally entangled projector family: a in [0,1], theta1, theta2 in [0,2pi].
struct MaxEnt {
    double a, theta1, theta2;
};

// One-excitation X state with populations x, 1-x and coherence -z/2;
// requires z^2/4 <= x(1-x).
struct XClass {
    double x, z;
};

// cos(eta)|01> + sin(eta)|10>, eta in (pi/2, pi).
struct EtaState {
    double eta;
};

// 4x4 matrix loaded from a text file (see load_density for the format).
struct RawFile {
    std::string path;
};

using StateSpec = std::variant<CollectiveE, CollectiveG, CollectiveS, CollectiveA,
                               Product, Gibbs, MaxEnt, XClass, EtaState, RawFile>;

// Throws ConstraintError / FormatError when the spec's parameters are out of
// range or violate a family constraint.
void validate_spec(const StateSpec& spec);

DensityMatrix make_state(const StateSpec& spec);

// File format: 4 lines of 4 whitespace-separated complex entries `re+imj`
// (bare reals accepted), canonical basis. Validated on load.
DensityMatrix load_density(const std::string& path);
void save_density(std::ostream& out, const DensityMatrix& rho);

}  // namespace tq
