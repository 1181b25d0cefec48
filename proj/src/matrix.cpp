#include "tq/matrix.hpp"

#include <cmath>

#include "tq/errors.hpp"

namespace tq {

Eigen::VectorXcd vec(const Mat4& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), 16);
}

Mat4 unvec(const Eigen::VectorXcd& v) {
    return Eigen::Map<const Mat4>(v.data());
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Vector4d hermitian_eigenvalues(const Mat4& m) {
    Mat4 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian eigensolve failed to converge");
    return solver.eigenvalues();
}

Mat4 sqrt_psd(const Mat4& m, double eig_floor) {
    Mat4 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian eigensolve failed to converge");
    Eigen::Vector4d ev = solver.eigenvalues();
    Vec4 root;
    for (int i = 0; i < 4; ++i) {
        if (ev[i] < eig_floor)
            throw NumericalError("sqrt_psd: eigenvalue " + std::to_string(ev[i]) +
                                 " below floor " + std::to_string(eig_floor));
        root[i] = std::sqrt(std::max(ev[i], 0.0));
    }
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace tq
