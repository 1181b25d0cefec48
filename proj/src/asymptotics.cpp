#include "tq/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tq/errors.hpp"

namespace tq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_unit_interval(const char* name, double v) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
        std::ostringstream msg;
        msg << name << " = " << v << " outside [0,1]";
        throw std::domain_error(msg.str());
    }
}

double clamp01(double c, const char* what) {
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

ThermalContext ThermalContext::from_beta_omega(double bw) {
    if (std::isnan(bw) || bw < 0.0)
        throw std::domain_error("beta*omega must be in [0, inf]");
    return {bw};
}

ThermalContext ThermalContext::from_temperature(double t_over_omega) {
    if (std::isnan(t_over_omega) || t_over_omega < 0.0)
        throw std::domain_error("T/omega must be in [0, inf]");
    if (t_over_omega == 0.0) return {kInf};
    if (std::isinf(t_over_omega)) return {0.0};
    return {1.0 / t_over_omega};
}

double ThermalContext::y() const { return std::exp(-beta_omega); }

double ThermalContext::u() const {
    const double e = y();
    return 1.0 + e + e * e;
}

double ThermalContext::temperature() const {
    if (beta_omega == 0.0) return kInf;
    if (std::isinf(beta_omega)) return 0.0;
    return 1.0 / beta_omega;
}

DensityMatrix gibbs_state(const ThermalContext& ctx) {
    const double e = ctx.y();
    const double norm = (1.0 + e) * (1.0 + e);
    Mat4 m = Mat4::Zero();
    m(0, 0) = e * e / norm;
    m(1, 1) = e / norm;
    m(2, 2) = e / norm;
    m(3, 3) = 1.0 / norm;
    return {m, Basis::Canonical};
}

DensityMatrix asymptotic_state(double fidelity, const ThermalContext& ctx) {
    check_unit_interval("fidelity", fidelity);
    const double e = ctx.y();
    const double uu = ctx.u();
    const double rest = 1.0 - fidelity;
    Mat4 m = Mat4::Zero();
    m(0, 0) = e * e * rest / uu;
    m(1, 1) = e * rest / (2.0 * uu) + fidelity / 2.0;
    m(2, 2) = m(1, 1);
    m(1, 2) = e * rest / (2.0 * uu) - fidelity / 2.0;
    m(2, 1) = m(1, 2);
    m(3, 3) = rest / uu;
    return {m, Basis::Canonical};
}

double threshold_fidelity(const ThermalContext& ctx) {
    const double e = ctx.y();
    return e / ((1.0 + e) * (1.0 + e));
}

double mixing_probability(double fidelity, const ThermalContext& ctx) {
    check_unit_interval("fidelity", fidelity);
    const double e = ctx.y();
    const double p = ((1.0 + e) * (1.0 + e) * fidelity - e) / ctx.u();
    if (p < -1e-12) {
        std::ostringstream msg;
        msg << "fidelity " << fidelity << " below threshold " << threshold_fidelity(ctx)
            << ": asymptotic state is not a singlet/Gibbs mixture";
        throw NotRepresentableError(msg.str());
    }
    return clamp01(p, "mixing probability");
}

DensityMatrix werner_state(const WernerDecomposition& w) {
    check_unit_interval("p", w.p);
    const ThermalContext ctx = ThermalContext::from_beta_omega(w.beta_omega);
    const Vec4& a = singlet_ket();
    Mat4 m = (1.0 - w.p) * gibbs_state(ctx).mat + w.p * (a * a.adjoint());
    return {m, Basis::Canonical};
}

Concurrence werner_concurrence(double p, const ThermalContext& ctx) {
    check_unit_interval("p", p);
    const double e = ctx.y();
    const double value = p - 2.0 * e / ((1.0 + e) * (1.0 + e)) * (1.0 - p);
    return {clamp01(value, "concurrence")};
}

double werner_threshold_probability(const ThermalContext& ctx) {
    const double e = ctx.y();
    return 2.0 * e / (1.0 + 4.0 * e + e * e);
}

Concurrence asymptotic_concurrence(double fidelity, const ThermalContext& ctx) {
    check_unit_interval("fidelity", fidelity);
    // F - 3(1-F)/(1+2cosh bw) rewritten through y = e^{-bw}.
    const double e = ctx.y();
    const double value = fidelity - 3.0 * e * (1.0 - fidelity) / ctx.u();
    return {clamp01(value, "concurrence")};
}

double entanglement_threshold_fidelity(const ThermalContext& ctx) {
    const double e = ctx.y();
    return 3.0 * e / (1.0 + 4.0 * e + e * e);
}

double critical_temperature(double fidelity) {
    if (std::isnan(fidelity) || fidelity <= 0.0 || fidelity >= 0.5) {
        std::ostringstream msg;
        msg << "critical temperature defined for fidelity in (0, 1/2), got " << fidelity;
        throw std::domain_error(msg.str());
    }
    const double s = std::sqrt(3.0) * std::sqrt(3.0 - 8.0 * fidelity + 4.0 * fidelity * fidelity);
    return 1.0 / std::log((s + 3.0 - 4.0 * fidelity) / (2.0 * fidelity));
}

Concurrence product_asymptotic_concurrence(double alpha, const ThermalContext& ctx) {
    check_unit_interval("alpha", alpha);
    const double a2 = alpha * alpha;
    const double e = ctx.y();
    const double value =
        ((1.0 - a2) * (1.0 + e * e) / 2.0 - e * (1.0 + 2.0 * a2)) / ctx.u();
    return {clamp01(value, "concurrence")};
}

double product_critical_temperature(double alpha) {
    if (std::isnan(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        std::ostringstream msg;
        msg << "finite critical temperature requires alpha in (0,1), got " << alpha;
        throw std::domain_error(msg.str());
    }
    const double a2 = alpha * alpha;
    const double s = std::sqrt(3.0) * std::sqrt(2.0 * a2 + a2 * a2);
    return 1.0 / std::log((s + 1.0 + 2.0 * a2) / (1.0 - a2));
}

double gibbs_fidelity(double beta0_omega) {
    if (std::isnan(beta0_omega) || beta0_omega < 0.0)
        throw std::domain_error("beta0*omega must be in [0, inf]");
    const double e = std::exp(-beta0_omega);
    return e / ((1.0 + e) * (1.0 + e));
}

double gibbs_critical_temperature(double t0_over_omega) {
    if (std::isnan(t0_over_omega) || t0_over_omega <= 0.0)
        throw std::domain_error("T0/omega must be > 0");
    const double f = gibbs_fidelity(std::isinf(t0_over_omega) ? 0.0 : 1.0 / t0_over_omega);
    if (f == 0.0) return 0.0;  // T0 so small the fidelity underflows
    return critical_temperature(f);
}

double maxent_fidelity(double a, double theta) {
    check_unit_interval("a", a);
    return 0.5 * (1.0 - a * a) * (1.0 - std::cos(theta));
}

double maxent_theta(double theta1, double theta2) {
    const double two_pi = 2.0 * std::numbers::pi;
    double theta = std::fmod(theta1 - theta2, two_pi);
    if (theta < 0.0) theta += two_pi;
    return theta;
}

bool in_region_E(double a, double theta) {
    check_unit_interval("a", a);
    const double a2 = a * a;
    if (a2 > 0.5) return false;
    const double ratio = std::max(-1.0, a2 / (a2 - 1.0));
    const double lo = std::acos(ratio);
    return theta >= lo && theta <= 2.0 * std::numbers::pi - lo;
}

Concurrence maxent_asymptotic_concurrence(double a, double theta,
                                          const ThermalContext& ctx) {
    if (!in_region_E(a, theta))
        return asymptotic_concurrence(maxent_fidelity(a, theta), ctx);
    const double b2 = 1.0 - a * a;
    const double e = ctx.y();
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    const double value =
        (b2 * (s2 * (1.0 + e * e) - 2.0 * e * std::cos(theta)) - e * (1.0 + 2.0 * a * a)) /
        ctx.u();
    return {clamp01(value, "concurrence")};
}

double maxent_zero_temperature_concurrence(double a, double theta) {
    return (1.0 - a * a) * std::pow(std::sin(theta / 2.0), 2);
}

double maxent_infinite_temperature_concurrence(double a, double theta) {
    return -(a * a + (1.0 - a * a) * std::cos(theta));
}

std::optional<double> gibbs_return_temperature(double a, double theta) {
    const double f = maxent_fidelity(a, theta);
    constexpr double kBoundaryTol = 1e-12;
    if (f > 0.25 + kBoundaryTol) return std::nullopt;
    if (f >= 0.25 - kBoundaryTol) return kInf;  // on the F = 1/4 curve
    if (f == 0.0) return 0.0;
    // Solve y/(1+y)^2 = F for y; the root in (0,1) gives the temperature.
    const double arg = (1.0 - 2.0 * f + std::sqrt(1.0 - 4.0 * f)) / (2.0 * f);
    return 1.0 / std::log(arg);
}

Concurrence xclass_asymptotic_concurrence(double z, const ThermalContext& ctx) {
    if (std::isnan(z) || z <= 0.0 || z >= 1.0)
        throw std::domain_error("xclass parameter z must be in (0,1)");
    const double e = ctx.y();
    const double value = z + (1.0 - z) * (1.0 - e) * (1.0 - e) / (2.0 * ctx.u());
    return {clamp01(value, "concurrence")};
}

}  // namespace tq
