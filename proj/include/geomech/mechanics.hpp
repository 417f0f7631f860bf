#pragma once

#include <Eigen/Dense>
#include <utility>

#include "geomech/so3.hpp"

namespace geomech {

using Vec = Eigen::VectorXd;

struct HarmonicOscillatorParams {
    double k = 1.0;
    double m = 1.0;
    void validate() const;
};

struct KeplerParams {
    double mu = 1.0;  // G (m1 + m2)
    void validate() const;
};

struct PendulumParams {
    double ml2 = 1.0;
    double mgl = 1.0;
    void validate() const;
};

/// Symmetric positive definite inertia with its cached inverse.
class Inertia {
public:
    Inertia() : Inertia(Mat3::Identity()) {}
    explicit Inertia(const Mat3& I);
    static Inertia diagonal(double i1, double i2, double i3);

    const Mat3& matrix() const { return I_; }
    const Mat3& inverse() const { return Iinv_; }

private:
    Mat3 I_;
    Mat3 Iinv_;
};

struct RigidBodyParams {
    Inertia inertia;
};

struct HeavyTopParams {
    Inertia inertia;
    double m = 1.0;
    double g = 9.81;
    Vec3 chi = Vec3(0.0, 0.0, 1.0);  // pivot to centre of mass, body frame
    void validate() const;
};

struct QuadrotorParams {
    Inertia inertia;
    double m = 1.0;
    double g = 9.81;
    void validate() const;
};

// harmonic oscillator, x = (q, v)
Vec ho_vectorfield(const HarmonicOscillatorParams& p, const Vec& x);
double ho_energy(const HarmonicOscillatorParams& p, double q, double v);

// planar Kepler problem, x = (r1, r2, v1, v2)
Vec kepler_vectorfield(const KeplerParams& p, const Vec& x);  // throws SingularOrigin
double kepler_energy(const KeplerParams& p, const Vec& x);    // throws SingularOrigin
double kepler_angmom(const KeplerParams& p, const Vec& x);

// planar pendulum in (theta, p) and embedded on the cylinder x^2 + y^2 = 1
Vec pendulum_vf(const PendulumParams& p, double theta, double mom);
double pendulum_energy(const PendulumParams& p, double theta, double mom);
Vec3 pendulum_embedded_vf(const PendulumParams& p, const Vec3& x);
double pendulum_embedded_energy(const PendulumParams& p, const Vec3& x);
double cylinder_defect(const Vec3& x);  // |x^2 + y^2 - 1|
Vec3 project_to_cylinder(const Vec3& x);  // throws DegenerateProjection

double rigidbody_energy(const RigidBodyParams& p, const Vec3& Pi);
double rigidbody_casimir(const Vec3& Pi);

double heavytop_energy(const HeavyTopParams& p, const Vec3& Pi, const Vec3& Gamma);
/// (Pi . Gamma, |Gamma|^2)
std::pair<double, double> heavytop_casimirs(const Vec3& Pi, const Vec3& Gamma);

/// Rotational plus translational kinetic energy plus m g q3.
double quadrotor_energy(const QuadrotorParams& p, const Vec3& Pi, const Vec3& q, const Vec3& mom);

/// |R^T R - I|_F
double orthogonality_defect(const Mat3& R);

}  // namespace geomech
