#pragma once

#include "tq/basis.hpp"
#include "tq/matrix.hpp"

namespace tq {

// Two-qubit state: 4x4 complex Hermitian, unit trace, positive semidefinite,
// tagged with the basis its entries refer to.
struct DensityMatrix {
    Mat4 mat;
    Basis basis = Basis::Canonical;
};

// Residuals of the three density-matrix invariants.
struct Diagnostics {
    double trace_err;  // |tr(rho) - 1|
    double herm_err;   // max |rho - rho^dagger|
    double min_eig;    // smallest eigenvalue of the Hermitized matrix
};

// Default validity tolerances for constructed states.
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kEigFloor = -1e-10;

Diagnostics validate_density(const DensityMatrix& rho);

bool within_tolerance(const Diagnostics& d, double trace_tol = kTraceTol,
                      double herm_tol = kHermTol, double eig_floor = kEigFloor);

// Throws ValidationError when rho violates the default tolerances.
void require_valid(const DensityMatrix& rho);

// U rho U^dagger (or the inverse); involutive, spectrum-preserving.
DensityMatrix change_basis(const DensityMatrix& rho, Basis target);

// F = <a|rho|a>, the overlap with the singlet. Basis independent.
double fidelity_singlet(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);  // tr(rho^2)

}  // namespace tq
