#include <Eigen/Geometry>

#include "geomech/integrators.hpp"

namespace geomech {

namespace {

using Quat = Eigen::Quaterniond;

// body-frame rates of the rigid body / heavy top
struct Rates {
    Vec3 Pi;
    Vec3 Gamma;
};

Rates body_rates(const Inertia& inertia, const Vec3& Pi, const Vec3& Gamma, const Vec3& torque_arm) {
    const Vec3 Omega = inertia.inverse() * Pi;
    return {Vec3(Pi.cross(Omega) + Gamma.cross(torque_arm)), Gamma.cross(Omega)};
}

Eigen::Vector4d qdot(const Eigen::Vector4d& q, const Vec3& Omega) {
    // (w, x, y, z) times (0, Omega), halved
    Eigen::Vector4d d;
    d[0] = -q[1] * Omega[0] - q[2] * Omega[1] - q[3] * Omega[2];
    d[1] = q[0] * Omega[0] + q[2] * Omega[2] - q[3] * Omega[1];
    d[2] = q[0] * Omega[1] + q[3] * Omega[0] - q[1] * Omega[2];
    d[3] = q[0] * Omega[2] + q[1] * Omega[1] - q[2] * Omega[0];
    return 0.5 * d;
}

Mat3 quat_matrix(const Eigen::Vector4d& q) {
    return Quat(q[0], q[1], q[2], q[3]).normalized().toRotationMatrix();
}

struct Full {
    Eigen::Vector4d q;
    Vec3 x;
    Vec3 Pi;
    Vec3 Gamma;
};

Full quat_rk4(const Inertia& inertia, const Full& s, const Vec3& arm, const Vec3& drift, double t) {
    auto f = [&](const Full& y) {
        const Rates r = body_rates(inertia, y.Pi, y.Gamma, arm);
        const Vec3 Omega = inertia.inverse() * y.Pi;
        return Full{qdot(y.q, Omega), Vec3(quat_matrix(y.q) * drift), r.Pi, r.Gamma};
    };
    auto axpy = [](const Full& y, double h, const Full& k) {
        return Full{y.q + h * k.q, y.x + h * k.x, y.Pi + h * k.Pi, y.Gamma + h * k.Gamma};
    };
    const Full k1 = f(s);
    const Full k2 = f(axpy(s, 0.5 * t, k1));
    const Full k3 = f(axpy(s, 0.5 * t, k2));
    const Full k4 = f(axpy(s, t, k3));
    Full out;
    out.q = s.q + t / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    out.q.normalize();
    out.x = s.x + t / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    out.Pi = s.Pi + t / 6.0 * (k1.Pi + 2.0 * k2.Pi + 2.0 * k3.Pi + k4.Pi);
    out.Gamma = s.Gamma + t / 6.0 * (k1.Gamma + 2.0 * k2.Gamma + 2.0 * k3.Gamma + k4.Gamma);
    return out;
}

Eigen::Vector4d to_quat(const Rotation& R) {
    const Quat q(R.matrix());
    return {q.w(), q.x(), q.y(), q.z()};
}

// inverse of the left logarithmic derivative of exp applied to Omega
Vec3 dexpinv(const Vec3& theta, const Vec3& Omega) {
    return solve3(Mat3(dexp_dual_matrix(theta).transpose()), Omega);
}

struct Stage {
    Vec3 theta;
    Vec3 x;
    Vec3 Pi;
    Vec3 Gamma;
};

Stage rkmk4(const Inertia& inertia, const Rotation& R, const Stage& s0, const Vec3& arm, const Vec3& drift,
            double t) {
    auto f = [&](const Stage& y) {
        const Rates r = body_rates(inertia, y.Pi, y.Gamma, arm);
        const Vec3 Omega = inertia.inverse() * y.Pi;
        const Mat3 Ry = R.matrix() * exp_so3(y.theta).matrix();
        return Stage{dexpinv(y.theta, Omega), Vec3(Ry * drift), r.Pi, r.Gamma};
    };
    auto axpy = [](const Stage& y, double h, const Stage& k) {
        return Stage{y.theta + h * k.theta, y.x + h * k.x, y.Pi + h * k.Pi, y.Gamma + h * k.Gamma};
    };
    const Stage k1 = f(s0);
    const Stage k2 = f(axpy(s0, 0.5 * t, k1));
    const Stage k3 = f(axpy(s0, 0.5 * t, k2));
    const Stage k4 = f(axpy(s0, t, k3));
    auto comb = [&](const Vec3& a, const Vec3& b1, const Vec3& b2, const Vec3& b3, const Vec3& b4) {
        return Vec3(a + t / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4));
    };
    return {comb(s0.theta, k1.theta, k2.theta, k3.theta, k4.theta), comb(s0.x, k1.x, k2.x, k3.x, k4.x),
            comb(s0.Pi, k1.Pi, k2.Pi, k3.Pi, k4.Pi),
            comb(s0.Gamma, k1.Gamma, k2.Gamma, k3.Gamma, k4.Gamma)};
}

}  // namespace

RigidBodyState quat_rk4_step(const RigidBodyParams& params, const RigidBodyState& s, double t) {
    const Full out =
        quat_rk4(params.inertia, {to_quat(s.R), Vec3::Zero(), s.Pi, Vec3::Zero()}, Vec3::Zero(), Vec3::Zero(), t);
    return {Rotation(quat_matrix(out.q)), out.Pi};
}

HeavyTopState quat_rk4_step(const HeavyTopParams& params, const HeavyTopState& s, double t) {
    const Vec3 arm = params.m * params.g * params.chi;
    const Full out = quat_rk4(params.inertia, {to_quat(s.R), s.x, s.Pi, s.Gamma}, arm, arm, t);
    return {Rotation(quat_matrix(out.q)), out.x, out.Pi, out.Gamma};
}

RigidBodyState rkmk4_step(const RigidBodyParams& params, const RigidBodyState& s, double t) {
    const Stage out =
        rkmk4(params.inertia, s.R, {Vec3::Zero(), Vec3::Zero(), s.Pi, Vec3::Zero()}, Vec3::Zero(), Vec3::Zero(), t);
    return {s.R * exp_so3(out.theta), out.Pi};
}

HeavyTopState rkmk4_step(const HeavyTopParams& params, const HeavyTopState& s, double t) {
    const Vec3 arm = params.m * params.g * params.chi;
    const Stage out = rkmk4(params.inertia, s.R, {Vec3::Zero(), s.x, s.Pi, s.Gamma}, arm, arm, t);
    return {s.R * exp_so3(out.theta), out.x, out.Pi, out.Gamma};
}

}  // namespace geomech
