#pragma once

#include "tq/density_matrix.hpp"

namespace tq {

// Entanglement monotone in [0,1]; 0 separable, 1 maximally entangled.
struct Concurrence {
    double value;
};

// Wootters concurrence max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with
// l_i the descending eigenvalues of rho (sy⊗sy) rho* (sy⊗sy), computed via
// the Hermitian problem sqrt(rho) rho~ sqrt(rho).
Concurrence concurrence(const DensityMatrix& rho);

// Closed form for X states (nonzero canonical entries only at positions
// 11,22,23,32,33,44): max(0, 2(|rho23| - sqrt(rho11 rho44))).
// Throws StructureError when other entries exceed 1e-10.
Concurrence concurrence_x(const DensityMatrix& rho);

}  // namespace tq
