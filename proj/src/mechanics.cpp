#include "geomech/mechanics.hpp"

#include <cmath>

#include "geomech/errors.hpp"

namespace geomech {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw InvalidParameter(std::string(name) + " must be positive");
}

void require_dim(const Vec& x, Eigen::Index n) {
    if (x.size() != n) throw DimMismatch(static_cast<std::size_t>(x.size()), static_cast<std::size_t>(n));
}

}  // namespace

void HarmonicOscillatorParams::validate() const {
    require_positive(k, "k");
    require_positive(m, "m");
}

void KeplerParams::validate() const { require_positive(mu, "mu"); }

void PendulumParams::validate() const {
    require_positive(ml2, "ml2");
    require_positive(mgl, "mgl");
}

Inertia::Inertia(const Mat3& I) : I_(I) {
    if (!I.allFinite()) throw InvalidParameter("inertia has non-finite entries");
    if ((I - I.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw InvalidParameter("inertia not symmetric");
    Eigen::LLT<Mat3> llt(I);
    if (llt.info() != Eigen::Success) throw InvalidParameter("inertia not positive definite");
    Iinv_ = llt.solve(Mat3::Identity());
}

Inertia Inertia::diagonal(double i1, double i2, double i3) {
    return Inertia(Vec3(i1, i2, i3).asDiagonal().toDenseMatrix());
}

void HeavyTopParams::validate() const {
    require_positive(m, "m");
    require_positive(g, "g");
    if (!chi.allFinite()) throw InvalidParameter("chi has non-finite entries");
}

void QuadrotorParams::validate() const {
    require_positive(m, "m");
    if (!(g >= 0.0)) throw InvalidParameter("g must be non-negative");
}

Vec ho_vectorfield(const HarmonicOscillatorParams& p, const Vec& x) {
    require_dim(x, 2);
    Vec out(2);
    out << x[1], -p.k * x[0] / p.m;
    return out;
}

double ho_energy(const HarmonicOscillatorParams& p, double q, double v) {
    return 0.5 * p.m * v * v + 0.5 * p.k * q * q;
}

Vec kepler_vectorfield(const KeplerParams& p, const Vec& x) {
    require_dim(x, 4);
    const Eigen::Vector2d r = x.head<2>();
    const double n = r.norm();
    if (n == 0.0) throw SingularOrigin();
    const Eigen::Vector2d acc = -p.mu / (n * n * n) * r;
    Vec out(4);
    out << x[2], x[3], acc[0], acc[1];
    return out;
}

double kepler_energy(const KeplerParams& p, const Vec& x) {
    require_dim(x, 4);
    const double n = x.head<2>().norm();
    if (n == 0.0) throw SingularOrigin();
    return 0.5 * x.tail<2>().squaredNorm() - p.mu / n;
}

double kepler_angmom(const KeplerParams&, const Vec& x) {
    require_dim(x, 4);
    return x[0] * x[3] - x[1] * x[2];
}

Vec pendulum_vf(const PendulumParams& p, double theta, double mom) {
    Vec out(2);
    out << mom / p.ml2, -p.mgl * std::sin(theta);
    return out;
}

double pendulum_energy(const PendulumParams& p, double theta, double mom) {
    return mom * mom / (2.0 * p.ml2) - p.mgl * std::cos(theta);
}

Vec3 pendulum_embedded_vf(const PendulumParams& p, const Vec3& x) {
    return {-x.y() * x.z() / p.ml2, x.x() * x.z() / p.ml2, -p.mgl * x.y()};
}

double pendulum_embedded_energy(const PendulumParams& p, const Vec3& x) {
    return x.z() * x.z() / (2.0 * p.ml2) - p.mgl * x.x();
}

double cylinder_defect(const Vec3& x) { return std::abs(x.x() * x.x() + x.y() * x.y() - 1.0); }

Vec3 project_to_cylinder(const Vec3& x) {
    const double r = std::hypot(x.x(), x.y());
    if (r == 0.0) throw DegenerateProjection();
    return {x.x() / r, x.y() / r, x.z()};
}

double rigidbody_energy(const RigidBodyParams& p, const Vec3& Pi) {
    return 0.5 * Pi.dot(p.inertia.inverse() * Pi);
}

double rigidbody_casimir(const Vec3& Pi) { return Pi.squaredNorm(); }

double heavytop_energy(const HeavyTopParams& p, const Vec3& Pi, const Vec3& Gamma) {
    return 0.5 * Pi.dot(p.inertia.inverse() * Pi) + p.m * p.g * Gamma.dot(p.chi);
}

std::pair<double, double> heavytop_casimirs(const Vec3& Pi, const Vec3& Gamma) {
    return {Pi.dot(Gamma), Gamma.squaredNorm()};
}

double quadrotor_energy(const QuadrotorParams& p, const Vec3& Pi, const Vec3& q, const Vec3& mom) {
    return 0.5 * Pi.dot(p.inertia.inverse() * Pi) + mom.squaredNorm() / (2.0 * p.m) + p.m * p.g * q.z();
}

double orthogonality_defect(const Mat3& R) { return (R.transpose() * R - Mat3::Identity()).norm(); }

}  // namespace geomech
