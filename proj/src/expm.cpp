#include "tq/expm.hpp"

#include <cmath>

namespace tq {

namespace {

using Mat = Eigen::MatrixXcd;

Mat ident(const Mat& a) { return Mat::Identity(a.rows(), a.cols()); }

// Each pade_k fills U, V so that (V+U)(V-U)^{-1} approximates exp(A).
void pade3(const Mat& a, Mat& u, Mat& v) {
    static const double b[] = {120., 60., 12., 1.};
    const Mat a2 = a * a;
    u = a * (b[3] * a2 + b[1] * ident(a));
    v = b[2] * a2 + b[0] * ident(a);
}

void pade5(const Mat& a, Mat& u, Mat& v) {
    static const double b[] = {30240., 15120., 3360., 420., 30., 1.};
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    u = a * (b[5] * a4 + b[3] * a2 + b[1] * ident(a));
    v = b[4] * a4 + b[2] * a2 + b[0] * ident(a);
}

void pade7(const Mat& a, Mat& u, Mat& v) {
    static const double b[] = {17297280., 8648640., 1995840., 277200.,
                               25200.,    1512.,    56.,      1.};
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident(a));
    v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident(a);
}

void pade9(const Mat& a, Mat& u, Mat& v) {
    static const double b[] = {17643225600., 8821612800., 2075673600., 302702400.,
                               30270240.,    2162160.,    110880.,     3960.,
                               90.,          1.};
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    const Mat a8 = a6 * a2;
    u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident(a));
    v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident(a);
}

void pade13(const Mat& a, Mat& u, Mat& v) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
             b[3] * a2 + b[1] * ident(a));
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
        b[0] * ident(a);
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    Mat u, v;
    int squarings = 0;
    if (norm < 1.495585217958292e-2) {
        pade3(a, u, v);
    } else if (norm < 2.539398330063230e-1) {
        pade5(a, u, v);
    } else if (norm < 9.504178996162932e-1) {
        pade7(a, u, v);
    } else if (norm < 2.097847961257068e0) {
        pade9(a, u, v);
    } else {
        const double theta13 = 5.371920351148152;
        std::frexp(norm / theta13, &squarings);
        if (squarings < 0) squarings = 0;
        const Mat scaled = a * std::ldexp(1.0, -squarings);
        pade13(scaled, u, v);
    }
    Mat result = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace tq
