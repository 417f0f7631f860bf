#include <doctest.h>

#include <cmath>
#include <functional>

#include "geomech/errors.hpp"
#include "geomech/integrators.hpp"
#include "geomech/mechanics.hpp"
#include "oracles.hpp"

using namespace geomech;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

// directional derivative of E along f by central differences
double fd_along(const std::function<double(const Vec&)>& E, const Vec& x, const Vec& f, double e = 1e-6) {
    return (E(x + e * f) - E(x - e * f)) / (2 * e);
}

Vec grad(const std::function<double(const Vec&)>& F, const Vec& x, double e = 1e-6) {
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        Vec d = Vec::Zero(x.size());
        d[i] = e;
        g[i] = (F(x + d) - F(x - d)) / (2 * e);
    }
    return g;
}

}  // namespace

TEST_CASE("harmonic oscillator") {
    const HarmonicOscillatorParams p;
    CHECK(ho_vectorfield(p, vec({1, 0})) == vec({0, -1}));
    CHECK(ho_vectorfield(p, vec({0, 0})) == vec({0, 0}));
    CHECK(ho_energy(p, 1, 0) == 0.5);
    CHECK(ho_energy(p, 0, 0) == 0.0);
    CHECK_THROWS_AS(ho_vectorfield(p, vec({1})), DimMismatch);
    CHECK_THROWS_AS((HarmonicOscillatorParams{0.0, 1.0}.validate()), InvalidParameter);

    const HarmonicOscillatorParams q{4.0, 2.0};
    oracle::Rng rng(51);
    for (int i = 0; i < 50; ++i) {
        const Vec a = vec({rng.uniform(-2, 2), rng.uniform(-2, 2)});
        const Vec b = vec({rng.uniform(-2, 2), rng.uniform(-2, 2)});
        const double c = rng.uniform(-3, 3);
        CHECK((ho_vectorfield(q, a + c * b) - ho_vectorfield(q, a) - c * ho_vectorfield(q, b)).norm() <= 1e-14);
    }
    // exact flow q = A cos(wt) + B sin(wt)
    const double w = std::sqrt(q.k / q.m);
    const double E0 = ho_energy(q, 0.3, -0.4);
    for (double t = 0; t < 20; t += 0.37) {
        const double qt = 0.3 * std::cos(w * t) + (-0.4 / w) * std::sin(w * t);
        const double vt = -0.3 * w * std::sin(w * t) + -0.4 * std::cos(w * t);
        CHECK(std::abs(ho_energy(q, qt, vt) - E0) <= 1e-12);
    }
}

TEST_CASE("Kepler") {
    const KeplerParams p;
    const Vec circ = vec({1, 0, 0, 1});
    const Vec f = kepler_vectorfield(p, circ);
    CHECK(f == vec({0, 1, -1, 0}));
    CHECK(kepler_energy(p, circ) == -0.5);
    CHECK(kepler_angmom(p, circ) == 1.0);

    const Vec x0 = vec({1, 0, 0, 0.5});
    CHECK(kepler_energy(p, x0) == doctest::Approx(-0.875));
    CHECK(kepler_angmom(p, x0) == 0.5);
    CHECK(kepler_angmom(p, vec({1, 0, 0, -0.5})) == -0.5);

    const KeplerParams p3{3.0};
    for (double a = 0; a < 6.3; a += 0.5) {
        const Vec x = vec({std::cos(a), std::sin(a), 0.2, 0.1});
        CHECK(kepler_vectorfield(p3, x).tail<2>().norm() == doctest::Approx(3.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(kepler_vectorfield(p, vec({0, 0, 1, 0})), SingularOrigin);
    CHECK_THROWS_AS(kepler_energy(p, vec({0, 0, 1, 0})), SingularOrigin);
}

TEST_CASE("Kepler angular momentum under Stormer-Verlet") {
    const KeplerParams p;
    const PartField f1 = [](const Vec&, const Vec& v) -> Vec { return v; };
    const PartField f2 = [&](const Vec& q, const Vec& v) -> Vec {
        Vec x(4);
        x << q, v;
        return kepler_vectorfield(p, x).tail<2>();
    };
    Vec q = vec({1, 0}), v = vec({0, 0.5});
    const auto sv = PartitionedTableau::stormer_verlet();
    for (int k = 0; k < 300; ++k) {
        const double L0 = q[0] * v[1] - q[1] * v[0];
        std::tie(q, v) = prk_step(sv, f1, f2, q, v, 0.01);
        CHECK(std::abs(q[0] * v[1] - q[1] * v[0] - L0) <= 1e-12);
    }
}

TEST_CASE("pendulum") {
    const PendulumParams p;
    CHECK(pendulum_vf(p, 0, 0) == vec({0, 0}));
    const Vec f = pendulum_vf(p, kPi / 2, 0);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == doctest::Approx(-1.0));

    const PendulumParams q{2.0, 3.0};
    oracle::Rng rng(52);
    const auto H = [&](const Vec& x) { return pendulum_energy(q, x[0], x[1]); };
    for (int i = 0; i < 50; ++i) {
        const Vec x = vec({rng.uniform(-3, 3), rng.uniform(-2, 2)});
        const Vec g = grad(H, x);
        const Vec fv = pendulum_vf(q, x[0], x[1]);
        CHECK(std::abs(fv[0] - g[1]) <= 1e-6);
        CHECK(std::abs(fv[1] + g[0]) <= 1e-6);
    }
}

TEST_CASE("embedded pendulum") {
    const PendulumParams p;
    CHECK(pendulum_embedded_vf(p, Vec3(1, 0, 0)) == Vec3::Zero());
    const PendulumParams q{2.0, 3.0};
    oracle::Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const double th = rng.uniform(-3, 3), mom = rng.uniform(-2, 2);
        const Vec fv = pendulum_vf(q, th, mom);
        // chain rule for (cos th, sin th, p)
        const Vec3 push(-std::sin(th) * fv[0], std::cos(th) * fv[0], fv[1]);
        const Vec3 e = pendulum_embedded_vf(q, Vec3(std::cos(th), std::sin(th), mom));
        CHECK((e - push).norm() <= 1e-12);

        const Vec3 x = rng.vec3(2.0);
        const Vec3 d = pendulum_embedded_vf(q, x);
        CHECK(std::abs(x.x() * d.x() + x.y() * d.y()) <= 1e-15 * (1.0 + x.squaredNorm() * std::abs(x.z())));
        CHECK(pendulum_embedded_energy(q, Vec3(std::cos(th), std::sin(th), mom)) ==
              doctest::Approx(pendulum_energy(q, th, mom)).epsilon(1e-14));
    }
}

TEST_CASE("project_to_cylinder") {
    CHECK(project_to_cylinder(Vec3(2, 0, 5)) == Vec3(1, 0, 5));
    CHECK_THROWS_AS(project_to_cylinder(Vec3(0, 0, 1)), DegenerateProjection);
    oracle::Rng rng(54);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(-3, 3);
        const Vec3 x(std::cos(a), std::sin(a), rng.uniform(-1, 1));
        CHECK((project_to_cylinder(x) - x).norm() <= 1e-15);
        const Vec3 y = rng.vec3(3.0);
        CHECK(cylinder_defect(project_to_cylinder(y)) <= 1e-15);
    }
    CHECK(cylinder_defect(Vec3(2, 0, 0)) == 3.0);
}

TEST_CASE("rigid body and heavy top observers") {
    const RigidBodyParams rb{Inertia::diagonal(1, 10, 100)};
    CHECK(rigidbody_energy(rb, Vec3(1, 1, 1)) == doctest::Approx(0.555).epsilon(1e-15));
    CHECK(rigidbody_energy(rb, Vec3::Zero()) == 0.0);
    CHECK(rigidbody_casimir(Vec3::Zero()) == 0.0);
    CHECK(rigidbody_casimir(Vec3(1, 1, 1)) == 3.0);

    HeavyTopParams ht;
    ht.inertia = Inertia::diagonal(1, 10, 100);
    ht.chi = Vec3(1, 0, 0);
    CHECK(heavytop_energy(ht, Vec3::Zero(), Vec3(0, 0, 1)) == 0.0);
    ht.chi = Vec3(0, 0, 0.5);
    CHECK(heavytop_energy(ht, Vec3(1, 1, 1), Vec3(0, 0, 1)) == doctest::Approx(0.555 + 9.81 * 0.5).epsilon(1e-14));
    const auto [pg, g2] = heavytop_casimirs(Vec3(1, 1, 1), Vec3(0, 0, 1));
    CHECK(pg == 1.0);
    CHECK(g2 == 1.0);

    CHECK_THROWS_AS(Inertia(Vec3(1, -1, 1).asDiagonal().toDenseMatrix()), InvalidParameter);
    Mat3 asym = Mat3::Identity();
    asym(0, 1) = 0.1;
    CHECK_THROWS_AS(Inertia{asym}, InvalidParameter);
    HeavyTopParams bad;
    bad.m = -1;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("quadrotor energy") {
    QuadrotorParams p;
    p.inertia = Inertia::diagonal(2, 2, 4);
    p.m = 2.0;
    p.g = 10.0;
    CHECK(quadrotor_energy(p, Vec3(2, 0, 4), Vec3(0, 0, 1), Vec3(2, 0, 0)) == doctest::Approx(1 + 2 + 1 + 20));
}

TEST_CASE("energies are constant along their vector fields") {
    oracle::Rng rng(55);
    const HarmonicOscillatorParams ho{3.0, 0.5};
    const KeplerParams kp{2.0};
    const PendulumParams pp{1.5, 2.5};
    const Inertia I = Inertia::diagonal(1, 2, 3);
    HeavyTopParams ht;
    ht.inertia = I;
    ht.chi = Vec3(0.1, -0.2, 0.7);
    for (int i = 0; i < 50; ++i) {
        const Vec x = vec({rng.uniform(-2, 2), rng.uniform(-2, 2)});
        CHECK(std::abs(fd_along([&](const Vec& y) { return ho_energy(ho, y[0], y[1]); }, x, ho_vectorfield(ho, x))) <= 1e-6);

        const Vec k = vec({rng.uniform(0.5, 2), rng.uniform(0.5, 2), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        CHECK(std::abs(fd_along([&](const Vec& y) { return kepler_energy(kp, y); }, k, kepler_vectorfield(kp, k))) <= 1e-6);
        CHECK(std::abs(fd_along([&](const Vec& y) { return kepler_angmom(kp, y); }, k, kepler_vectorfield(kp, k))) <= 1e-6);

        const Vec pe = vec({rng.uniform(-3, 3), rng.uniform(-2, 2)});
        CHECK(std::abs(fd_along([&](const Vec& y) { return pendulum_energy(pp, y[0], y[1]); }, pe,
                                pendulum_vf(pp, pe[0], pe[1]))) <= 1e-6);

        const Vec3 c = rng.vec3(2.0);
        const Vec3 ce = pendulum_embedded_vf(pp, c);
        CHECK(std::abs(fd_along([&](const Vec& y) { return pendulum_embedded_energy(pp, Vec3(y)); }, Vec(c), Vec(ce))) <= 1e-6);

        // Euler and heavy-top equations written out here
        const Vec3 Pi = rng.vec3(2.0);
        const Vec3 Gam = rng.vec3_norm(1.0);
        const Vec3 Om = I.inverse() * Pi;
        Vec s(6), fs(6);
        s << Pi, Gam;
        fs << Pi.cross(Om) + ht.m * ht.g * Gam.cross(ht.chi), Gam.cross(Om);
        const auto E = [&](const Vec& y) { return heavytop_energy(ht, y.head<3>(), y.tail<3>()); };
        CHECK(std::abs(fd_along(E, s, fs)) <= 1e-6);
        const auto C1 = [&](const Vec& y) { return heavytop_casimirs(y.head<3>(), y.tail<3>()).first; };
        CHECK(std::abs(fd_along(C1, s, fs)) <= 1e-6);
        const RigidBodyParams rb{I};
        CHECK(std::abs(fd_along([&](const Vec& y) { return rigidbody_energy(rb, Vec3(y)); }, Vec(Pi), Vec(Pi.cross(Om)))) <= 1e-6);
    }
}

TEST_CASE("canonical Poisson bracket is antisymmetric") {
    oracle::Rng rng(56);
    const Eigen::Matrix2d J = (Eigen::Matrix2d() << 0, 1, -1, 0).finished();
    for (int i = 0; i < 50; ++i) {
        // random cubic polynomials in (q, p)
        Eigen::Matrix<double, 10, 1> a, b;
        for (int j = 0; j < 10; ++j) {
            a[j] = rng.uniform(-1, 1);
            b[j] = rng.uniform(-1, 1);
        }
        const auto poly = [](const Eigen::Matrix<double, 10, 1>& c) {
            return [c](const Vec& x) {
                const double q = x[0], p = x[1];
                return c[0] + c[1] * q + c[2] * p + c[3] * q * q + c[4] * q * p + c[5] * p * p + c[6] * q * q * q +
                       c[7] * q * q * p + c[8] * q * p * p + c[9] * p * p * p;
            };
        };
        const Vec x = vec({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const Vec gF = grad(poly(a), x), gG = grad(poly(b), x);
        const double FG = gF.dot(J * gG), GF = gG.dot(J * gF);
        CHECK(std::abs(FG + GF) <= 1e-6);
        CHECK(std::abs(gF.dot(J * gF)) <= 1e-6);
    }
}

TEST_CASE("orthogonality_defect") {
    CHECK(orthogonality_defect(Mat3::Identity()) == 0.0);
    oracle::Rng rng(57);
    for (int i = 0; i < 50; ++i) CHECK(orthogonality_defect(exp_so3(rng.vec3(3.0)).matrix()) <= 1e-12);
    const Vec3 u = Vec3(1, 2, -2).normalized();
    const double d = orthogonality_defect(Mat3::Identity() + 1e-3 * u * u.transpose());
    CHECK(d == doctest::Approx(2e-3).epsilon(0.2));
}
