#pragma once

#include <utility>
#include <vector>

#include "tq/density_matrix.hpp"
#include "tq/reservoir.hpp"

namespace tq {

// Generator of the dissipative semigroup as a 16x16 matrix acting on
// column-stacked canonical-basis density matrices.
struct Liouvillian {
    Eigen::MatrixXcd mat;
    ReservoirParams params;
};

Liouvillian build_liouvillian(const ReservoirParams& p);

// d(rho)/dt for a canonical-basis matrix.
Mat4 apply(const Liouvillian& lv, const Mat4& rho_canonical);

// Rate matrix M with d/dt (rho_ee, rho_ss, rho_aa, rho_gg)^T = M (...)^T.
// Off-diagonal rates are extracted from the generator's action on collective
// projectors; each diagonal entry is the negated sum of its column's
// off-diagonal entries, so summing a column off-diagonals-first gives 0.0.
Eigen::Matrix4d diagonal_block(const ReservoirParams& p);

// Collective-basis matrix elements (row, col) using kE/kS/kA/kG indices.
using ElementPair = std::pair<int, int>;

// Linear block B with d/dt (rho_{p1}, rho_{p2}, ...)^T = B (...)^T for
// collective-basis elements that close among themselves under the generator.
Eigen::MatrixXcd coherence_block(const Liouvillian& lv,
                                 const std::vector<ElementPair>& elems);

Eigen::Matrix2cd es_sg_block(const Liouvillian& lv);
Eigen::Matrix2cd ea_ag_block(const Liouvillian& lv);
Complex eg_rate(const Liouvillian& lv);  // d rho_eg/dt = rate * rho_eg
Complex sa_rate(const Liouvillian& lv);  // d rho_sa/dt = rate * rho_sa

}  // namespace tq
