#include "tq/basis.hpp"

#include <cmath>

namespace tq {

const Mat4& collective_to_canonical() {
    static const Mat4 u = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Mat4 m = Mat4::Zero();
        m(0, kE) = 1.0;
        m(1, kS) = r;
        m(2, kS) = r;
        m(1, kA) = r;
        m(2, kA) = -r;
        m(3, kG) = 1.0;
        return m;
    }();
    return u;
}

const Vec4& singlet_ket() {
    static const Vec4 a = collective_to_canonical().col(kA);
    return a;
}

const char* basis_name(Basis b) {
    return b == Basis::Canonical ? "canonical" : "collective";
}

}  // namespace tq
