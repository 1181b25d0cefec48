#include "tq/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tq/errors.hpp"

namespace tq {

namespace {

constexpr double kEigClamp = -1e-12;

const Mat4& spin_flip_matrix() {
    static const Mat4 yy = [] {
        Mat2 sy;
        sy << 0.0, Complex(0, 1), Complex(0, -1), 0.0;  // sigma_y in (|1>,|0>) order
        return kron(sy, sy);
    }();
    return yy;
}

double clamp_unit(double c, const char* what) {
    if (c < 0.0) return 0.0;
    if (c > 1.0) {
        if (c <= 1.0 + 1e-12) return 1.0;
        std::ostringstream msg;
        msg << what << " = " << c << " exceeds 1 beyond tolerance";
        throw NumericalError(msg.str());
    }
    return c;
}

}  // namespace

Concurrence concurrence(const DensityMatrix& rho) {
    require_valid(rho);
    const Mat4 r = change_basis(rho, Basis::Canonical).mat;
    const Mat4& yy = spin_flip_matrix();
    const Mat4 flipped = yy * r.conjugate() * yy;
    const Mat4 root = sqrt_psd(r);
    const Eigen::Vector4d ev = hermitian_eigenvalues(root * flipped * root);

    double lams[4];
    for (int i = 0; i < 4; ++i) {
        double l = ev[i];
        if (l < kEigClamp) {
            std::ostringstream msg;
            msg << "spin-flip spectrum has eigenvalue " << l << " below clamp threshold";
            throw NumericalError(msg.str());
        }
        lams[i] = std::sqrt(std::max(l, 0.0));
    }
    std::sort(lams, lams + 4, std::greater<>());
    return {clamp_unit(lams[0] - lams[1] - lams[2] - lams[3], "concurrence")};
}

Concurrence concurrence_x(const DensityMatrix& rho) {
    require_valid(rho);
    const Mat4 r = change_basis(rho, Basis::Canonical).mat;
    constexpr double kStructureTol = 1e-10;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool allowed = (i == j) || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!allowed && std::abs(r(i, j)) > kStructureTol) {
                std::ostringstream msg;
                msg << "entry (" << i + 1 << "," << j + 1 << ") = " << std::abs(r(i, j))
                    << " breaks the X structure";
                throw StructureError(msg.str());
            }
        }
    const double value =
        2.0 * (std::abs(r(1, 2)) - std::sqrt(std::max(0.0, r(0, 0).real() * r(3, 3).real())));
    return {clamp_unit(value, "concurrence")};
}

}  // namespace tq
