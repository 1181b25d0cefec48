#include "tq/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "tq/errors.hpp"

namespace tq {

Diagnostics validate_density(const DensityMatrix& rho) {
    Diagnostics d;
    d.trace_err = std::abs(rho.mat.trace() - Complex(1.0));
    d.herm_err = (rho.mat - rho.mat.adjoint().eval()).cwiseAbs().maxCoeff();
    d.min_eig = hermitian_eigenvalues(rho.mat).minCoeff();
    return d;
}

bool within_tolerance(const Diagnostics& d, double trace_tol, double herm_tol,
                      double eig_floor) {
    return d.trace_err <= trace_tol && d.herm_err <= herm_tol && d.min_eig >= eig_floor;
}

void require_valid(const DensityMatrix& rho) {
    Diagnostics d = validate_density(rho);
    if (!within_tolerance(d)) {
        std::ostringstream msg;
        msg << "invalid density matrix: trace_err=" << d.trace_err
            << " herm_err=" << d.herm_err << " min_eig=" << d.min_eig;
        throw ValidationError(msg.str());
    }
}

DensityMatrix change_basis(const DensityMatrix& rho, Basis target) {
    if (rho.basis == target) return rho;
    const Mat4& u = collective_to_canonical();
    if (target == Basis::Canonical) return {u * rho.mat * u.adjoint(), target};
    return {u.adjoint() * rho.mat * u, target};
}

double fidelity_singlet(const DensityMatrix& rho) {
    if (rho.basis == Basis::Collective) return rho.mat(kA, kA).real();
    const Vec4& a = singlet_ket();
    return (a.adjoint() * rho.mat * a)(0).real();
}

double purity(const DensityMatrix& rho) {
    return (rho.mat * rho.mat).trace().real();
}

}  // namespace tq
