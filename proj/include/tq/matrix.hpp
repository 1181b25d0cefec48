#pragma once

#include <Eigen/Dense>
#include <complex>

namespace tq {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Column-stacking vectorization: vec(A rho B) = kron(B^T, A) vec(rho).
Eigen::VectorXcd vec(const Mat4& m);
Mat4 unvec(const Eigen::VectorXcd& v);

Mat4 kron(const Mat2& a, const Mat2& b);

double max_abs(const Mat4& m);

// Eigenvalues of a Hermitian 4x4, ascending. Input is Hermitized first.
Eigen::Vector4d hermitian_eigenvalues(const Mat4& m);

// Principal square root of a positive-semidefinite Hermitian matrix.
// Eigenvalues in [eig_floor, 0) are treated as 0.
Mat4 sqrt_psd(const Mat4& m, double eig_floor = -1e-10);

}  // namespace tq
