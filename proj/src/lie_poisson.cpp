#include "geomech/integrators.hpp"
#include "newton3.hpp"

namespace geomech {

namespace detail {

RigidBodyState so3_step(const Inertia& inertia, RetractionTag tag, const Rotation& R, const Vec3& Pi,
                        double t, const Vec3* M_incr, const NewtonSettings& settings) {
    const Mat3& I = inertia.matrix();
    const Vec3 Omega0 = inertia.inverse() * Pi;
    if (tag == RetractionTag::Exp) {
        const Vec3 Omega = newton3(
            [&](const Vec3& W) -> Vec3 {
                const Mat3 J = J_mat(t * W);
                Vec3 r = J.transpose() * Pi;
                if (M_incr) r += J * *M_incr;
                return r - I * W;
            },
            Omega0, settings);
        const Rotation E = exp_so3(t * Omega);
        Vec3 Pi1 = E.matrix().transpose() * Pi;
        if (M_incr) Pi1 += *M_incr;
        return {R * E, Pi1};
    }
    const Vec3 Omega = newton3(
        [&](const Vec3& W) -> Vec3 {
            const Vec3 w = 0.5 * t * W;
            const Mat3 Wh = hat(w);
            Vec3 r = Pi - Wh * Pi;
            if (M_incr) r += *M_incr + Wh * *M_incr;
            return r - (1.0 + w.squaredNorm()) * (I * W);
        },
        Omega0, settings);
    const Rotation C = cay_so3(0.5 * t * Omega);
    Vec3 Pi1 = C.matrix().transpose() * Pi;
    if (M_incr) Pi1 += *M_incr;
    return {R * C, Pi1};
}

}  // namespace detail

RigidBodyState lie_poisson_left_step(const RigidBodyParams& params, const TrivializedRetraction& ret,
                                     const Rotation& R, const Vec3& Pi, double t,
                                     const NewtonSettings& settings) {
    const Mat3& I = params.inertia.matrix();
    const Vec3 Omega = detail::newton3(
        [&](const Vec3& W) -> Vec3 {
            const Vec3 xi = t * W;
            return ret.dual(xi) * (ret.tau(xi).matrix().transpose() * Pi) - I * W;
        },
        Vec3(params.inertia.inverse() * Pi), settings);
    const Rotation T = ret.tau(t * Omega);
    return {R * T, Ad_star_so3(T, Pi)};
}

RigidBodyState lie_poisson_right_step(const RigidBodyParams& params, const TrivializedRetraction& ret,
                                      const Rotation& R, const Vec3& pi, double t,
                                      const NewtonSettings& settings) {
    const Mat3& I = params.inertia.matrix();
    const Mat3& R0 = R.matrix();
    const Vec3 Omega = detail::newton3(
        [&](const Vec3& W) -> Vec3 {
            const Vec3 xi = t * W;
            const Mat3 R1 = R0 * ret.tau(xi).matrix();
            return ret.dual(xi) * (R1.transpose() * pi) - I * W;
        },
        Vec3(params.inertia.inverse() * (R0.transpose() * pi)), settings);
    return {R * ret.tau(t * Omega), pi};
}

RigidBodyState rigidbody_exp_step(const RigidBodyParams& params, const Rotation& R, const Vec3& Pi,
                                  double t, const NewtonSettings& settings) {
    return detail::so3_step(params.inertia, RetractionTag::Exp, R, Pi, t, nullptr, settings);
}

RigidBodyState rigidbody_cay_step(const RigidBodyParams& params, const Rotation& R, const Vec3& Pi,
                                  double t, const NewtonSettings& settings) {
    return detail::so3_step(params.inertia, RetractionTag::Cayley, R, Pi, t, nullptr, settings);
}

}  // namespace geomech
