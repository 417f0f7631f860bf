#include "geomech/integrators.hpp"

namespace geomech {

QuadrotorState quadrotor_step(const QuadrotorParams& params, const QuadrotorState& s,
                              const QuadrotorInput& u, double t, const QuadrotorOptions& opts,
                              const NewtonSettings& settings) {
    const Vec3 incr = opts.as_printed ? u.M : Vec3(t * u.M);
    const bool forced = !u.M.isZero(0.0);
    const RigidBodyState rot = detail::so3_step(params.inertia, opts.retraction, s.R, s.Pi, t,
                                                forced ? &incr : nullptr, settings);

    const Vec3 e3 = Vec3::UnitZ();
    const Vec3 thrust = u.F * (s.R.matrix() * e3);
    const Vec3 weight = params.m * params.g * e3;
    const Vec3 p1 = opts.as_printed ? Vec3(-s.p + t * weight - t * thrust) : Vec3(s.p + t * (thrust - weight));
    return {rot.R, rot.Pi, s.q + t * p1 / params.m, p1};
}

}  // namespace geomech
