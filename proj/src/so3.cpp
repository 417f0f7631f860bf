#include "geomech/so3.hpp"

#include <cmath>
#include <string>

#include "geomech/errors.hpp"

namespace geomech {

namespace {

constexpr double kRotationTol = 1e-9;

bool all_finite(const Mat3& m) { return m.allFinite(); }

}  // namespace

Rotation::Rotation(const Mat3& m) : m_(m) {
    if (!all_finite(m)) throw InvalidRotation("non-finite entries");
    const double defect = (m.transpose() * m - Mat3::Identity()).norm();
    if (defect > kRotationTol)
        throw InvalidRotation("orthogonality defect " + std::to_string(defect));
    const double det = m.determinant();
    if (std::abs(det - 1.0) > kRotationTol)
        throw InvalidRotation("determinant " + std::to_string(det));
}

Rotation Rotation::inverse() const { return Rotation(m_.transpose(), Unchecked{}); }

Rotation Rotation::operator*(const Rotation& o) const { return Rotation(Mat3(m_ * o.m_)); }

Mat3 hat(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return m;
}

Vec3 vee(const Mat3& m) {
    if ((m + m.transpose()).norm() > 1e-9) throw NotSkew();
    return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

namespace detail {

ExpCoeffs exp_coeffs_closed(double t) {
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double sh = std::sin(0.5 * t);
    const double t2 = t * t;
    ExpCoeffs k;
    k.sinc = s / t;
    k.a = 2.0 * sh * sh / t2;
    k.b = (t - s) / (t2 * t);
    k.c3 = (t2 - 4.0 * sh * sh) / (2.0 * t2 * t2);
    k.c4 = (2.0 * t - 3.0 * s + t * c) / (2.0 * t2 * t2 * t);
    return k;
}

ExpCoeffs exp_coeffs_series(double t) {
    const double t2 = t * t;
    const double t4 = t2 * t2;
    ExpCoeffs k;
    k.sinc = 1.0 - t2 / 6.0 + t4 / 120.0;
    k.a = 0.5 - t2 / 24.0 + t4 / 720.0;
    k.b = 1.0 / 6.0 - t2 / 120.0 + t4 / 5040.0;
    k.c3 = 1.0 / 24.0 - t2 / 720.0 + t4 / 40320.0;
    k.c4 = 1.0 / 120.0 - t2 / 2520.0 + t4 / 120960.0;
    return k;
}

ExpCoeffs exp_coeffs(double theta) {
    return theta < kSmallAngle ? exp_coeffs_series(theta) : exp_coeffs_closed(theta);
}

Mat3 dexp_dual_from(const ExpCoeffs& c, const Vec3& y) {
    const Mat3 Y = hat(y);
    return Mat3::Identity() + c.a * Y + c.b * (Y * Y);
}

Mat3 q_block_from(const ExpCoeffs& c, const Vec3& y, const Vec3& z) {
    const Mat3 Y = hat(y);
    const Mat3 Z = hat(z);
    const Mat3 YY = Y * Y;
    const Mat3 YZY = Y * Z * Y;
    return -0.5 * Z + c.b * (Y * Z + Z * Y - YZY) - c.c3 * (YY * Z + Z * YY - 3.0 * YZY) +
           c.c4 * (YZY * Y + Y * YZY);
}

}  // namespace detail

Rotation exp_so3(const Vec3& v) {
    const detail::ExpCoeffs c = detail::exp_coeffs(v.norm());
    const Mat3 V = hat(v);
    return Rotation(Mat3(Mat3::Identity() + c.sinc * V + c.a * (V * V)));
}

Vec3 log_so3(const Rotation& Rot) {
    const Mat3& R = Rot.matrix();
    const double tr = R.trace();
    if (tr <= -1.0 + 1e-9) throw NearPiRotation();
    const Vec3 w(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
    const double sin_t = 0.5 * w.norm();
    const double cos_t = 0.5 * (tr - 1.0);
    const double theta = std::atan2(sin_t, cos_t);
    if (cos_t > -0.9) {
        const double f = theta < kSmallAngle ? 0.5 * (1.0 + theta * theta / 6.0)
                                             : 0.5 * theta / sin_t;
        return f * w;
    }
    // close to pi the skew part loses precision; read the axis off R + R^T
    const Mat3 S = 0.5 * (R + R.transpose()) - cos_t * Mat3::Identity();
    int k = 0;
    S.diagonal().maxCoeff(&k);
    Vec3 n = S.col(k) / std::sqrt(S(k, k));
    if (n.dot(w) < 0.0) n = -n;
    return theta * n.normalized();
}

Rotation cay_so3(const Vec3& v) {
    const Mat3 V = hat(v);
    const double f = 2.0 / (1.0 + v.squaredNorm());
    return Rotation(Mat3(Mat3::Identity() + f * (V + V * V)));
}

Vec3 cay_inv_so3(const Rotation& Rot) {
    const Mat3& R = Rot.matrix();
    const double d = 1.0 + R.trace();
    if (std::abs(d) < 1e-12) throw SingularCayley();
    const Vec3 w(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
    return w / d;
}

Mat3 dexp_dual_matrix(const Vec3& y) {
    return detail::dexp_dual_from(detail::exp_coeffs(y.norm()), y);
}

DualCayley dcay_dual_matrix(const Vec3& y) {
    return {Mat3(Mat3::Identity() + hat(y)), 0.5 * (1.0 + y.squaredNorm())};
}

Mat3 J_mat(const Vec3& y) { return dexp_dual_matrix(y); }

Mat3 Q_mat(const Vec3& y, const Vec3& z) {
    return detail::q_block_from(detail::exp_coeffs(y.norm()), y, z);
}

SE3Element exp_se3(const Vec3& y, const Vec3& z) {
    return {exp_so3(y), J_mat(y) * z};
}

SE3Element cay_se3(const Vec3& w, const Vec3& u) {
    const Mat3 I_minus = Mat3::Identity() - hat(w);
    return {cay_so3(w), 2.0 * solve3(I_minus, u)};
}

Mat3 cay_se3_block(const Vec3& w, const Vec3& u) {
    const Mat3 W = hat(w);
    const Vec3 v = solve3(Mat3(Mat3::Identity() - W), u);
    const Mat3 I_plus = Mat3::Identity() + W;
    const Mat3 V = hat(v);
    Mat3 out;
    for (int j = 0; j < 3; ++j) out.col(j) = -2.0 * solve3(I_plus, V.col(j));
    return out;
}

Vec3 ad_star_so3(const Vec3& Omega, const Vec3& Pi) { return Pi.cross(Omega); }

Vec3 Ad_star_so3(const Rotation& R, const Vec3& Pi) { return R.matrix().transpose() * Pi; }

SE3Covector Ad_star_se3(const Rotation& R, const Vec3& x, const SE3Covector& mu) {
    const Mat3 Rt = R.matrix().transpose();
    return {Rt * (mu.Pi + mu.Gamma.cross(x)), Rt * mu.Gamma};
}

Vec3 solve3(const Mat3& A, const Vec3& b) {
    Mat3 adj;
    adj(0, 0) = A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
    adj(0, 1) = A(0, 2) * A(2, 1) - A(0, 1) * A(2, 2);
    adj(0, 2) = A(0, 1) * A(1, 2) - A(0, 2) * A(1, 1);
    adj(1, 0) = A(1, 2) * A(2, 0) - A(1, 0) * A(2, 2);
    adj(1, 1) = A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0);
    adj(1, 2) = A(0, 2) * A(1, 0) - A(0, 0) * A(1, 2);
    adj(2, 0) = A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0);
    adj(2, 1) = A(0, 1) * A(2, 0) - A(0, 0) * A(2, 1);
    adj(2, 2) = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    const double det = A(0, 0) * adj(0, 0) + A(0, 1) * adj(1, 0) + A(0, 2) * adj(2, 0);
    if (!(std::abs(det) >= 1e-14)) throw SingularMatrix();
    return adj * b / det;
}

}  // namespace geomech
