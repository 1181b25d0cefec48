#include "tq/states.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tq/errors.hpp"

namespace tq {

namespace {

using Vec2 = Eigen::Vector2cd;

// Single-qubit basis order (|1>, |0>), so kron lands in canonical order.
Vec2 bloch_ket(double theta, double phi) {
    return {std::polar(std::sin(theta), phi), Complex(std::cos(theta), 0.0)};
}

Vec4 kron_ket(const Vec2& a, const Vec2& b) {
    Vec4 v;
    v << a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1];
    return v;
}

DensityMatrix projector(const Vec4& psi) {
    Vec4 n = psi.normalized();
    return {n * n.adjoint(), Basis::Canonical};
}

void check_range(const char* name, double v, double lo, double hi, bool open) {
    bool bad = std::isnan(v) || (open ? (v <= lo || v >= hi) : (v < lo || v > hi));
    if (bad) {
        std::ostringstream msg;
        msg << "parameter " << name << "=" << v << " outside " << (open ? "(" : "[")
            << lo << ", " << hi << (open ? ")" : "]");
        throw ConstraintError(msg.str());
    }
}

struct SpecValidator {
    void operator()(const CollectiveE&) const {}
    void operator()(const CollectiveG&) const {}
    void operator()(const CollectiveS&) const {}
    void operator()(const CollectiveA&) const {}
    void operator()(const Product& p) const {
        for (double v : {p.theta_a, p.phi_a, p.theta_b, p.phi_b})
            if (!std::isfinite(v)) throw ConstraintError("product angles must be finite");
    }
    void operator()(const Gibbs& g) const {
        if (std::isnan(g.t0_over_omega) || g.t0_over_omega < 0.0)
            throw ConstraintError("gibbs temperature T0 must be >= 0");
    }
    void operator()(const MaxEnt& m) const {
        check_range("a", m.a, 0.0, 1.0, false);
        check_range("theta1", m.theta1, 0.0, 2.0 * std::numbers::pi, false);
        check_range("theta2", m.theta2, 0.0, 2.0 * std::numbers::pi, false);
    }
    void operator()(const XClass& x) const {
        check_range("x", x.x, 0.0, 1.0, true);
        check_range("z", x.z, 0.0, 1.0, true);
        if (x.z * x.z / 4.0 > x.x * (1.0 - x.x)) {
            std::ostringstream msg;
            msg << "xclass constraint z^2/4 <= x(1-x) violated: " << x.z * x.z / 4.0
                << " > " << x.x * (1.0 - x.x);
            throw ConstraintError(msg.str());
        }
    }
    void operator()(const EtaState& e) const {
        check_range("eta", e.eta, std::numbers::pi / 2.0, std::numbers::pi, true);
    }
    void operator()(const RawFile& r) const {
        if (r.path.empty()) throw ConstraintError("raw state file path is empty");
    }
};

struct StateBuilder {
    DensityMatrix operator()(const CollectiveE&) const {
        return projector(collective_to_canonical().col(kE));
    }
    DensityMatrix operator()(const CollectiveG&) const {
        return projector(collective_to_canonical().col(kG));
    }
    DensityMatrix operator()(const CollectiveS&) const {
        return projector(collective_to_canonical().col(kS));
    }
    DensityMatrix operator()(const CollectiveA&) const {
        return projector(collective_to_canonical().col(kA));
    }
    DensityMatrix operator()(const Product& p) const {
        return projector(
            kron_ket(bloch_ket(p.theta_a, p.phi_a), bloch_ket(p.theta_b, p.phi_b)));
    }
    DensityMatrix operator()(const Gibbs& g) const {
        const double beta0_omega =
            g.t0_over_omega == 0.0 ? std::numeric_limits<double>::infinity()
                                   : 1.0 / g.t0_over_omega;
        const double y = std::exp(-beta0_omega);
        const double norm = (1.0 + y) * (1.0 + y);
        Mat4 m = Mat4::Zero();
        m(0, 0) = y * y / norm;
        m(1, 1) = y / norm;
        m(2, 2) = y / norm;
        m(3, 3) = 1.0 / norm;
        return {m, Basis::Canonical};
    }
    DensityMatrix operator()(const MaxEnt& m) const {
        const double b = std::sqrt(1.0 - m.a * m.a);
        const double r = 1.0 / std::sqrt(2.0);
        Vec4 psi;
        psi << r * m.a, r * b * std::polar(1.0, m.theta1),
            r * b * std::polar(1.0, m.theta2),
            r * m.a * std::polar(1.0, m.theta1 + m.theta2 - std::numbers::pi);
        return {psi * psi.adjoint(), Basis::Canonical};
    }
    DensityMatrix operator()(const XClass& x) const {
        Mat4 m = Mat4::Zero();
        m(1, 1) = x.x;
        m(2, 2) = 1.0 - x.x;
        m(1, 2) = -x.z / 2.0;
        m(2, 1) = -x.z / 2.0;
        return {m, Basis::Canonical};
    }
    DensityMatrix operator()(const EtaState& e) const {
        Vec4 psi;
        psi << 0.0, std::sin(e.eta), std::cos(e.eta), 0.0;
        return projector(psi);
    }
    DensityMatrix operator()(const RawFile& r) const { return load_density(r.path); }
};

// Accepts `re+imj`, `re`, or `imj`.
Complex parse_complex(const std::string& token, const std::string& where) {
    const char* s = token.c_str();
    char* end = nullptr;
    double first = std::strtod(s, &end);
    if (end == s) throw FormatError("bad complex entry '" + token + "' in " + where);
    if (*end == '\0') return {first, 0.0};
    if (*end == 'j' && *(end + 1) == '\0') return {0.0, first};
    const char* s2 = end;
    double second = std::strtod(s2, &end);
    if (end == s2 || *end != 'j' || *(end + 1) != '\0')
        throw FormatError("bad complex entry '" + token + "' in " + where);
    return {first, second};
}

}  // namespace

void validate_spec(const StateSpec& spec) { std::visit(SpecValidator{}, spec); }

DensityMatrix make_state(const StateSpec& spec) {
    validate_spec(spec);
    return std::visit(StateBuilder{}, spec);
}

DensityMatrix load_density(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open state file '" + path + "'");
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::string token;
            if (!(in >> token))
                throw FormatError("state file '" + path + "' has fewer than 16 entries");
            m(i, j) = parse_complex(token, "'" + path + "'");
        }
    DensityMatrix rho{m, Basis::Canonical};
    Diagnostics d = validate_density(rho);
    if (!within_tolerance(d)) {
        std::ostringstream msg;
        msg << "file '" << path << "' is not a density matrix: trace_err=" << d.trace_err
            << " herm_err=" << d.herm_err << " min_eig=" << d.min_eig;
        throw FormatError(msg.str());
    }
    return rho;
}

void save_density(std::ostream& out, const DensityMatrix& rho) {
    const Mat4& m = change_basis(rho, Basis::Canonical).mat;
    char buf[80];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(i, j).real(), m(i, j).imag());
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace tq
