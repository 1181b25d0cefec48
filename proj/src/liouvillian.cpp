#include "tq/liouvillian.hpp"

namespace tq {

namespace {

using Eigen::MatrixXcd;

// rho -> A rho B on column-stacked matrices.
MatrixXcd superop(const Mat4& a, const Mat4& b) {
    const Mat4 bt = b.transpose();
    MatrixXcd out(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.block<4, 4>(4 * i, 4 * j) = bt(i, j) * a;
    return out;
}

struct AtomOps {
    Mat4 plus[2], minus[2], z[2];
    AtomOps() {
        Mat2 sp, s3, id;
        sp << 0, 1, 0, 0;  // |1><0| in single-qubit order (|1>, |0>)
        s3 << 1, 0, 0, -1;
        id.setIdentity();
        plus[0] = kron(sp, id);
        plus[1] = kron(id, sp);
        minus[0] = plus[0].adjoint();
        minus[1] = plus[1].adjoint();
        z[0] = kron(s3, id);
        z[1] = kron(id, s3);
    }
};

const AtomOps& ops() {
    static const AtomOps o;
    return o;
}

// Collective projector |i><i| expressed in the canonical basis.
Mat4 collective_projector(int i) {
    const Vec4 col = collective_to_canonical().col(i);
    return col * col.adjoint();
}

Mat4 collective_element(int r, int c) {
    const Mat4& u = collective_to_canonical();
    return u.col(r) * u.col(c).adjoint();
}

Complex collective_entry(const Mat4& canonical, int r, int c) {
    const Mat4& u = collective_to_canonical();
    return (u.col(r).adjoint() * canonical * u.col(c))(0);
}

}  // namespace

Liouvillian build_liouvillian(const ReservoirParams& p) {
    p.validate();
    const AtomOps& o = ops();
    const double nbar = p.nbar();
    const double gamma = p.G * p.gamma0;
    const Mat4 id = Mat4::Identity();

    Mat4 h = 0.5 * p.omega * (o.z[0] + o.z[1]) +
             p.Omega * (o.plus[0] * o.minus[1] + o.minus[0] * o.plus[1]);

    MatrixXcd mat = Complex(0, -1) * (superop(h, id) - superop(id, h));
    const double rates[2][2] = {{p.gamma0, gamma}, {gamma, p.gamma0}};
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            const double down = rates[j][k] * (1.0 + nbar);
            const double up = rates[j][k] * nbar;
            const Mat4 pm = o.plus[k] * o.minus[j];
            const Mat4 mp = o.minus[k] * o.plus[j];
            mat += 0.5 * down *
                   (2.0 * superop(o.minus[j], o.plus[k]) - superop(pm, id) - superop(id, pm));
            mat += 0.5 * up *
                   (2.0 * superop(o.plus[j], o.minus[k]) - superop(mp, id) - superop(id, mp));
        }
    }
    return {mat, p};
}

Mat4 apply(const Liouvillian& lv, const Mat4& rho_canonical) {
    return unvec(lv.mat * vec(rho_canonical));
}

Eigen::Matrix4d diagonal_block(const ReservoirParams& p) {
    const Liouvillian lv = build_liouvillian(p);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 4; ++i) {
        const Mat4 out = apply(lv, collective_projector(i));
        for (int j = 0; j < 4; ++j)
            if (j != i) m(j, i) = collective_entry(out, j, j).real();
        double outflow = 0.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) outflow += m(j, i);
        m(i, i) = -outflow;
    }
    return m;
}

Eigen::MatrixXcd coherence_block(const Liouvillian& lv,
                                 const std::vector<ElementPair>& elems) {
    const int n = static_cast<int>(elems.size());
    Eigen::MatrixXcd block(n, n);
    for (int col = 0; col < n; ++col) {
        const Mat4 out = apply(lv, collective_element(elems[col].first, elems[col].second));
        for (int row = 0; row < n; ++row)
            block(row, col) = collective_entry(out, elems[row].first, elems[row].second);
    }
    return block;
}

Eigen::Matrix2cd es_sg_block(const Liouvillian& lv) {
    return coherence_block(lv, {{kE, kS}, {kS, kG}});
}

Eigen::Matrix2cd ea_ag_block(const Liouvillian& lv) {
    return coherence_block(lv, {{kE, kA}, {kA, kG}});
}

Complex eg_rate(const Liouvillian& lv) {
    return coherence_block(lv, {{kE, kG}})(0, 0);
}

Complex sa_rate(const Liouvillian& lv) {
    return coherence_block(lv, {{kS, kA}})(0, 0);
}

}  // namespace tq
