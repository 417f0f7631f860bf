#pragma once

#include <Eigen/Dense>

namespace geomech {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;  // m(i, j) is row i, column j

/// Below this angle the closed-form coefficient functions switch to series.
inline constexpr double kSmallAngle = 1e-4;

/// Element of SO(3). The constructor rejects matrices that are not
/// orthogonal with unit determinant to 1e-9.
class Rotation {
public:
    Rotation() : m_(Mat3::Identity()) {}
    explicit Rotation(const Mat3& m);

    static Rotation identity() { return Rotation(); }

    const Mat3& matrix() const { return m_; }
    Rotation inverse() const;
    Rotation operator*(const Rotation& o) const;
    Vec3 operator*(const Vec3& v) const { return m_ * v; }

private:
    struct Unchecked {};
    Rotation(const Mat3& m, Unchecked) : m_(m) {}
    Mat3 m_;
};

struct SE3Element {
    Rotation rot;
    Vec3 trans = Vec3::Zero();
};

Mat3 hat(const Vec3& v);
Vec3 vee(const Mat3& m);  // throws NotSkew

Rotation exp_so3(const Vec3& v);
Vec3 log_so3(const Rotation& R);  // throws NearPiRotation

// (I - v^)^-1 (I + v^)
Rotation cay_so3(const Vec3& v);
Vec3 cay_inv_so3(const Rotation& R);  // throws SingularCayley

/// Dual of the left logarithmic derivative of exp at y: I + a(y) y^ + b(y) y^^2.
Mat3 dexp_dual_matrix(const Vec3& y);

struct DualCayley {
    Mat3 matrix;  // I + y^
    double scale; // (1 + |y|^2) / 2
};

/// Dual of the left logarithmic derivative of cay at y is matrix / scale.
DualCayley dcay_dual_matrix(const Vec3& y);

/// Translation block of exp on SE(3): exp((y, z)) = (exp(y), J(y) z).
Mat3 J_mat(const Vec3& y);

/// Off-diagonal block of the left logarithmic derivative of exp on SE(3)
/// at (y, z). Linear in z.
Mat3 Q_mat(const Vec3& y, const Vec3& z);

SE3Element exp_se3(const Vec3& y, const Vec3& z);

/// Cayley map of the 4x4 representation of (w, u).
SE3Element cay_se3(const Vec3& w, const Vec3& u);

/// Off-diagonal block of the left logarithmic derivative of cay on SE(3).
Mat3 cay_se3_block(const Vec3& w, const Vec3& u);

/// ad*_Omega(Pi) = Pi x Omega
Vec3 ad_star_so3(const Vec3& Omega, const Vec3& Pi);

/// Ad*_R(Pi) = R^T Pi
Vec3 Ad_star_so3(const Rotation& R, const Vec3& Pi);

struct SE3Covector {
    Vec3 Pi;
    Vec3 Gamma;
};

/// Coadjoint action of (R, x) on se(3)*: (R^T (Pi + Gamma x x), R^T Gamma).
SE3Covector Ad_star_se3(const Rotation& R, const Vec3& x, const SE3Covector& mu);

/// Adjugate solve of A x = b; throws SingularMatrix when |det A| < 1e-14.
Vec3 solve3(const Mat3& A, const Vec3& b);

namespace detail {

struct ExpCoeffs {
    double sinc;  // sin t / t
    double a;     // (1 - cos t) / t^2
    double b;     // (t - sin t) / t^3
    double c3;    // (t^2 + 2 cos t - 2) / (2 t^4)
    double c4;    // (2t - 3 sin t + t cos t) / (2 t^5)
};

ExpCoeffs exp_coeffs_closed(double theta);
ExpCoeffs exp_coeffs_series(double theta);
ExpCoeffs exp_coeffs(double theta);

Mat3 dexp_dual_from(const ExpCoeffs& c, const Vec3& y);
Mat3 q_block_from(const ExpCoeffs& c, const Vec3& y, const Vec3& z);

}  // namespace detail

}  // namespace geomech
