#include "tq/propagate.hpp"

#include <cmath>
#include <sstream>

#include "tq/errors.hpp"
#include "tq/expm.hpp"

namespace tq {

namespace {

constexpr double kPropagateTol = 1e-8;
constexpr double kResidualTol = 1e-10;
constexpr double kConvergenceHorizon = 200.0;  // units of 1/gamma0

DensityMatrix finish(const Mat4& canonical, Basis original, double tol) {
    DensityMatrix out{canonical, Basis::Canonical};
    Diagnostics d = validate_density(out);
    if (!within_tolerance(d, tol, tol, -tol)) {
        std::ostringstream msg;
        msg << "propagation lost density-matrix invariants: trace_err=" << d.trace_err
            << " herm_err=" << d.herm_err << " min_eig=" << d.min_eig;
        throw NumericalError(msg.str());
    }
    return change_basis(out, original);
}

Complex singlet_expectation(const Mat4& canonical) {
    const Vec4& a = singlet_ket();
    return (a.adjoint() * canonical * a)(0);
}

}  // namespace

DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& lv, double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("propagation time must be finite and >= 0");
    require_valid(rho0);
    const Mat4 start = change_basis(rho0, Basis::Canonical).mat;
    const Mat4 evolved = unvec(expm(lv.mat * t) * vec(start));
    return finish(evolved, rho0.basis, kPropagateTol);
}

DensityMatrix propagate(const DensityMatrix& rho0, const ReservoirParams& p, double t) {
    return propagate(rho0, build_liouvillian(p), t);
}

DensityMatrix propagate_rk(const DensityMatrix& rho0, const ReservoirParams& p, double t,
                           double dt_max) {
    if (!(dt_max > 0.0)) throw std::domain_error("dt_max must be > 0");
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("propagation time must be finite and >= 0");
    require_valid(rho0);
    const Liouvillian lv = build_liouvillian(p);
    const int steps = t > 0.0 ? static_cast<int>(std::ceil(t / dt_max)) : 0;
    const double h = steps > 0 ? t / steps : 0.0;
    Eigen::VectorXcd y = vec(change_basis(rho0, Basis::Canonical).mat);
    for (int i = 0; i < steps; ++i) {
        const Eigen::VectorXcd k1 = lv.mat * y;
        const Eigen::VectorXcd k2 = lv.mat * (y + 0.5 * h * k1);
        const Eigen::VectorXcd k3 = lv.mat * (y + 0.5 * h * k2);
        const Eigen::VectorXcd k4 = lv.mat * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return finish(unvec(y), rho0.basis, kPropagateTol);
}

DensityMatrix steady_state(const ReservoirParams& p, const DensityMatrix& rho0) {
    require_valid(rho0);
    const Liouvillian lv = build_liouvillian(p);
    const Mat4 start = change_basis(rho0, Basis::Canonical).mat;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lv.mat, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cutoff = 1e-8 * std::max(sv(0), 1.0);
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < cutoff) ++null_dim;

    const int expected = p.strongly_correlated() ? 2 : 1;
    if (null_dim != expected) {
        std::ostringstream msg;
        msg << "null space of the generator has dimension " << null_dim << ", expected "
            << expected << " for G=" << p.G;
        throw DegeneracyError(msg.str());
    }

    Mat4 candidate;
    if (expected == 1) {
        Mat4 kernel = unvec(svd.matrixV().col(15));
        const Complex tr = kernel.trace();
        if (std::abs(tr) < 1e-12)
            throw DegeneracyError("null vector of the generator is traceless");
        candidate = kernel / tr;
    } else {
        const Mat4 ka = unvec(svd.matrixV().col(14));
        const Mat4 kb = unvec(svd.matrixV().col(15));
        const double fidelity = fidelity_singlet({start, Basis::Canonical});
        Eigen::Matrix2cd lhs;
        Eigen::Vector2cd rhs;
        lhs << ka.trace(), kb.trace(), singlet_expectation(ka), singlet_expectation(kb);
        rhs << Complex(1.0), Complex(fidelity);
        const Eigen::Vector2cd coeff = lhs.fullPivLu().solve(rhs);
        candidate = coeff(0) * ka + coeff(1) * kb;
    }
    candidate = 0.5 * (candidate + candidate.adjoint().eval());

    const double residual = (lv.mat * vec(candidate)).cwiseAbs().maxCoeff();
    if (residual > kResidualTol) {
        std::ostringstream msg;
        msg << "steady-state residual ||L rho|| = " << residual << " exceeds "
            << kResidualTol;
        throw NumericalError(msg.str());
    }

    // Second route: long-time propagation with its own convergence check.
    const double horizon = kConvergenceHorizon / p.gamma0;
    const Mat4 propagated = unvec(expm(lv.mat * horizon) * vec(start));
    const double prop_residual = (lv.mat * vec(propagated)).cwiseAbs().maxCoeff();
    if (prop_residual > kResidualTol) {
        std::ostringstream msg;
        msg << "propagation to t=" << horizon
            << " has not converged: ||L rho|| = " << prop_residual;
        throw NumericalError(msg.str());
    }
    const double gap = max_abs(candidate - propagated);
    if (gap > kPropagateTol) {
        std::ostringstream msg;
        msg << "null-space and propagation steady states disagree by " << gap;
        throw NumericalError(msg.str());
    }

    DensityMatrix out{candidate, Basis::Canonical};
    Diagnostics d = validate_density(out);
    if (!within_tolerance(d, 1e-10, 1e-10, -1e-10)) {
        std::ostringstream msg;
        msg << "steady state violates density-matrix invariants: trace_err=" << d.trace_err
            << " herm_err=" << d.herm_err << " min_eig=" << d.min_eig;
        throw NumericalError(msg.str());
    }
    return out;
}

}  // namespace tq
