#include <cmath>

#include "geomech/errors.hpp"
#include "geomech/integrators.hpp"
#include "newton3.hpp"

namespace geomech {

HeavyTopState make_heavytop_state(const Rotation& R, const Vec3& x, const Vec3& Pi, const Vec3& Gamma) {
    if (!x.allFinite() || !Pi.allFinite() || !Gamma.allFinite())
        throw InvalidParameter("heavy top state has non-finite entries");
    if (std::abs(Gamma.norm() - 1.0) > 1e-9) throw InvalidParameter("Gamma must be a unit vector");
    return {R, x, Pi, Gamma};
}

HeavyTopState heavytop_exp_step(const HeavyTopParams& params, const HeavyTopState& s, double t,
                                const NewtonSettings& settings) {
    const Mat3& I = params.inertia.matrix();
    const Vec3 z = t * params.m * params.g * params.chi;

    struct Update {
        Rotation E;
        Vec3 b;
        Vec3 Pi;
        Vec3 Gamma;
    };
    auto update = [&](const Vec3& y) {
        const Rotation E = exp_so3(y);
        const Vec3 b = J_mat(y) * z;
        const Mat3 Et = E.matrix().transpose();
        return Update{E, b, Et * (s.Pi + s.Gamma.cross(b)), Et * s.Gamma};
    };

    const Vec3 Omega = detail::newton3(
        [&](const Vec3& W) -> Vec3 {
            const Vec3 y = t * W;
            const Update u = update(y);
            return J_mat(y) * u.Pi + Q_mat(y, z).transpose() * u.Gamma - I * W;
        },
        Vec3(params.inertia.inverse() * s.Pi), settings);

    const Update u = update(t * Omega);
    return {s.R * u.E, s.x + s.R * u.b, u.Pi, u.Gamma};
}

HeavyTopState heavytop_cay_step(const HeavyTopParams& params, const HeavyTopState& s, double t,
                                const NewtonSettings& settings) {
    const Mat3& I = params.inertia.matrix();
    const Vec3 z = t * params.m * params.g * params.chi;
    const Vec3 u = 0.5 * z;

    struct Update {
        Rotation C;
        Vec3 b;
        Vec3 Pi;
        Vec3 Gamma;
    };
    auto update = [&](const Vec3& w) {
        const Rotation C = cay_so3(w);
        const Vec3 b = solve3(Mat3(Mat3::Identity() - hat(w)), z);
        const Mat3 Ct = C.matrix().transpose();
        return Update{C, b, Ct * (s.Pi + s.Gamma.cross(b)), Ct * s.Gamma};
    };

    const Vec3 Omega = detail::newton3(
        [&](const Vec3& W) -> Vec3 {
            const Vec3 w = 0.5 * t * W;
            const Update up = update(w);
            const Mat3 At = 2.0 * (Mat3::Identity() + hat(w)) / (1.0 + w.squaredNorm());
            return 0.5 * (At * up.Pi + cay_se3_block(w, u).transpose() * up.Gamma) - I * W;
        },
        Vec3(params.inertia.inverse() * s.Pi), settings);

    const Update up = update(0.5 * t * Omega);
    return {s.R * up.C, s.x + s.R * up.b, up.Pi, up.Gamma};
}

}  // namespace geomech
