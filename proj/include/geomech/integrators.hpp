#pragma once

#include <utility>

#include "geomech/geometry.hpp"
#include "geomech/mechanics.hpp"
#include "geomech/ode.hpp"
#include "geomech/so3.hpp"

namespace geomech {

// flat phase spaces

/// x' = x + h f((1 - theta) x + theta x'). theta = 0 is evaluated explicitly.
Vec implicit_disc_step(const VectorField& f, double theta, const Vec& x, double h,
                       const NewtonSettings& settings = {});

/// q' = q + h f1(Q, P), p' = p + h f2(Q, P) with
/// Q = (1 - theta) q + theta q' and P = theta p + (1 - theta) p'.
std::pair<Vec, Vec> cotangent_theta_step(const PartField& f1, const PartField& f2, const Vec& q,
                                         const Vec& p, double h, double theta,
                                         const NewtonSettings& settings = {});

// rigid body on SO(3)

struct RigidBodyState {
    Rotation R;
    Vec3 Pi;  // body momentum; spatial momentum for lie_poisson_right_step
};

/// g' = g tau(t Omega), mu' = tau(t Omega)^T mu, dual(t Omega) mu' = I Omega.
RigidBodyState lie_poisson_left_step(const RigidBodyParams& params, const TrivializedRetraction& ret,
                                     const Rotation& R, const Vec3& Pi, double t,
                                     const NewtonSettings& settings = {});

/// Right lift. Takes and returns the spatial momentum pi, which is left
/// unchanged; dual(t Omega) R'^T pi = I Omega.
RigidBodyState lie_poisson_right_step(const RigidBodyParams& params, const TrivializedRetraction& ret,
                                      const Rotation& R, const Vec3& pi, double t,
                                      const NewtonSettings& settings = {});

/// Exponential scheme with the momentum relation written in Pi_k:
/// J(t Omega)^T Pi_k = I Omega.
RigidBodyState rigidbody_exp_step(const RigidBodyParams& params, const Rotation& R, const Vec3& Pi,
                                  double t, const NewtonSettings& settings = {});

/// Cayley scheme, w = t Omega / 2: (I - w^) Pi_k = (1 + |w|^2) I Omega.
RigidBodyState rigidbody_cay_step(const RigidBodyParams& params, const Rotation& R, const Vec3& Pi,
                                  double t, const NewtonSettings& settings = {});

// heavy top on SE(3)

struct HeavyTopState {
    Rotation R;
    Vec3 x = Vec3::Zero();
    Vec3 Pi = Vec3::Zero();
    Vec3 Gamma = Vec3(0.0, 0.0, 1.0);
};

/// Checks |Gamma| = 1 to 1e-9.
HeavyTopState make_heavytop_state(const Rotation& R, const Vec3& x, const Vec3& Pi, const Vec3& Gamma);

HeavyTopState heavytop_exp_step(const HeavyTopParams& params, const HeavyTopState& s, double t,
                                const NewtonSettings& settings = {});
HeavyTopState heavytop_cay_step(const HeavyTopParams& params, const HeavyTopState& s, double t,
                                const NewtonSettings& settings = {});

// quadrotor

struct QuadrotorState {
    Rotation R;
    Vec3 Pi = Vec3::Zero();
    Vec3 q = Vec3::Zero();
    Vec3 p = Vec3::Zero();
};

struct QuadrotorInput {
    Vec3 M = Vec3::Zero();  // body moment
    double F = 0.0;         // total thrust
};

struct QuadrotorOptions {
    RetractionTag retraction = RetractionTag::Exp;
    /// Use p' = -p + t m g e3 - t F R e3 and add M without the step factor.
    bool as_printed = false;
};

QuadrotorState quadrotor_step(const QuadrotorParams& params, const QuadrotorState& s,
                              const QuadrotorInput& u, double t, const QuadrotorOptions& opts = {},
                              const NewtonSettings& settings = {});

// baselines

RigidBodyState quat_rk4_step(const RigidBodyParams& params, const RigidBodyState& s, double t);
HeavyTopState quat_rk4_step(const HeavyTopParams& params, const HeavyTopState& s, double t);

RigidBodyState rkmk4_step(const RigidBodyParams& params, const RigidBodyState& s, double t);
HeavyTopState rkmk4_step(const HeavyTopParams& params, const HeavyTopState& s, double t);

namespace detail {

/// Shared rotational sub-step; M_incr is added to the transported momentum
/// when non-null.
RigidBodyState so3_step(const Inertia& inertia, RetractionTag tag, const Rotation& R, const Vec3& Pi,
                        double t, const Vec3* M_incr, const NewtonSettings& settings);

}  // namespace detail

}  // namespace geomech
