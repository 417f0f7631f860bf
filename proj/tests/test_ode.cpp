#include <doctest.h>

#include <cmath>

#include "geomech/errors.hpp"
#include "geomech/ode.hpp"
#include "oracles.hpp"

using namespace geomech;

namespace {

using Mat2 = Eigen::Matrix2d;

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

const VectorField ho = [](const Vec& x) -> Vec { return v2(x[1], -x[0]); };
const PartField ho_f1 = [](const Vec&, const Vec& v) -> Vec { return v; };
const PartField ho_f2 = [](const Vec& q, const Vec&) -> Vec { return -q; };
const PartField zero_f = [](const Vec& q, const Vec&) -> Vec { return Vec::Zero(q.size()); };

// one-step matrix from unit initial conditions
template <class Step>
Mat2 one_step_matrix(Step step) {
    Mat2 S;
    for (int j = 0; j < 2; ++j) {
        const auto [q, v] = step(v1(j == 0 ? 1.0 : 0.0), v1(j == 1 ? 1.0 : 0.0));
        S.col(j) << q[0], v[0];
    }
    return S;
}

Mat2 J2() {
    Mat2 J;
    J << 0, 1, -1, 0;
    return J;
}

PartitionedTableau printed_sv() {
    Mat a = Mat::Zero(2, 2);
    a(1, 0) = 1.0;
    Mat ah = Mat::Zero(2, 2);
    ah(0, 0) = 0.5;
    ah(1, 0) = 0.5;
    const Vec b = Vec::Constant(2, 0.5);
    return {a, b, ah, b};
}

}  // namespace

TEST_CASE("explicit Euler") {
    const double h = 0.1;
    CHECK(explicit_euler_step(ho, v2(1, 0), h) == v2(1, -0.1));
    const VectorField zero = [](const Vec& x) -> Vec { return Vec::Zero(x.size()); };
    CHECK(explicit_euler_step(zero, v2(3, 4), h) == v2(3, 4));

    Mat2 A;
    A << 0.3, -1.2, 2.0, 0.5;
    const VectorField lin = [A](const Vec& x) -> Vec { return A * x; };
    const Vec x = v2(0.7, -0.2);
    CHECK((explicit_euler_step(lin, x, h) - (Mat2::Identity() + h * A) * x).norm() <= 1e-15);

    const Mat2 S = one_step_matrix([&](const Vec& q, const Vec& v) {
        const Vec y = explicit_euler_step(ho, v2(q[0], v[0]), h);
        return std::make_pair(v1(y[0]), v1(y[1]));
    });
    Mat2 want;
    want << 1, h, -h, 1;
    CHECK((S - want).norm() <= 1e-12);
    CHECK(S.determinant() == doctest::Approx(1 + h * h).epsilon(1e-12));
}

TEST_CASE("implicit Euler") {
    const double h = 0.1;
    const Vec y = implicit_euler_step(ho, v2(1, 0), h);
    CHECK(y[0] == doctest::Approx(1.0 / 1.01).epsilon(1e-12));
    CHECK(y[1] == doctest::Approx(-0.1 / 1.01).epsilon(1e-12));
    const VectorField zero = [](const Vec& x) -> Vec { return Vec::Zero(x.size()); };
    CHECK(implicit_euler_step(zero, v2(3, 4), h) == v2(3, 4));

    const Mat2 S = one_step_matrix([&](const Vec& q, const Vec& v) {
        const Vec z = implicit_euler_step(ho, v2(q[0], v[0]), h);
        return std::make_pair(v1(z[0]), v1(z[1]));
    });
    Mat2 M;
    M << 1, -h, h, 1;
    CHECK((S - M.inverse()).norm() <= 1e-12);
    CHECK(S.determinant() == doctest::Approx(1 / (1 + h * h)).epsilon(1e-12));

    // stiff linear problem
    const double lam = -1e3;
    const VectorField stiff = [lam](const Vec& x) -> Vec { return lam * x; };
    const Vec s = implicit_euler_step(stiff, v1(1.0), 0.1);
    CHECK(std::abs(s[0] - 1.0 / (1.0 - 0.1 * lam)) <= 1e-14);
    CHECK(std::abs(s[0] - 1.0 - 0.1 * lam * s[0]) <= 1e-12);
}

TEST_CASE("symplectic Euler matrices") {
    oracle::Rng rng(41);
    for (double h : {0.1, 0.05, 0.3}) {
        const Mat2 A = one_step_matrix([&](const Vec& q, const Vec& v) { return symplectic_euler_a_step(ho_f1, ho_f2, q, v, h); });
        Mat2 wantA;
        wantA << 1 - h * h, h, -h, 1;
        CHECK((A - wantA).norm() <= 1e-12);
        CHECK(std::abs(A.determinant() - 1.0) <= 1e-14);
        CHECK((A.transpose() * J2() * A - J2()).norm() <= 1e-12);

        const Mat2 B = one_step_matrix([&](const Vec& q, const Vec& v) { return symplectic_euler_b_step(ho_f1, ho_f2, q, v, h); });
        Mat2 wantB;
        wantB << 1, h, -h, 1 - h * h;
        CHECK((B - wantB).norm() <= 1e-12);
        CHECK(std::abs(B.determinant() - 1.0) <= 1e-14);
        CHECK((B.transpose() * J2() * B - J2()).norm() <= 1e-12);
    }
    auto [q, v] = symplectic_euler_a_step(zero_f, zero_f, v1(2), v1(3), 0.1);
    CHECK(q == v1(2));
    CHECK(v == v1(3));
    auto [qb, vb] = symplectic_euler_b_step(zero_f, zero_f, v1(2), v1(3), 0.1);
    CHECK(qb == v1(2));
    CHECK(vb == v1(3));
    CHECK_THROWS_AS(symplectic_euler_a_step(ho_f1, ho_f2, v1(1), v2(1, 2), 0.1), DimMismatch);
}

TEST_CASE("symplectic Euler on a non-separable field solves the implicit relation") {
    const PartField f1 = [](const Vec& q, const Vec& v) -> Vec { return v + 0.3 * q.cwiseProduct(v); };
    const PartField f2 = [](const Vec& q, const Vec& v) -> Vec { return -q - 0.2 * v.cwiseProduct(v); };
    const Vec q = v2(0.4, -0.3), v = v2(0.1, 0.6);
    const double h = 0.2;
    auto [qa, va] = symplectic_euler_a_step(f1, f2, q, v, h);
    CHECK((va - v - h * f2(q, va)).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK((qa - q - h * f1(q, va)).lpNorm<Eigen::Infinity>() <= 1e-15);
    auto [qb, vb] = symplectic_euler_b_step(f1, f2, q, v, h);
    CHECK((qb - q - h * f1(qb, v)).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("rk_step with the one-stage tableaux") {
    oracle::Rng rng(42);
    const VectorField f = [](const Vec& x) -> Vec { return v2(std::sin(x[1]), -x[0] * x[0]); };
    for (int i = 0; i < 50; ++i) {
        const Vec x = v2(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double h = rng.uniform(0.01, 0.2);
        CHECK(rk_step(ButcherTableau::explicit_euler(), f, x, h) == explicit_euler_step(f, x, h));
        const Vec a = rk_step(ButcherTableau::implicit_euler(), f, x, h);
        const Vec b = implicit_euler_step(f, x, h);
        CHECK((a - b).lpNorm<Eigen::Infinity>() <= 1e-11);
    }
}

TEST_CASE("classical RK4 on exponential growth") {
    const VectorField f = [](const Vec& x) -> Vec { return x; };
    const double h = 0.1;
    const Vec y = rk_step(ButcherTableau::rk4(), f, v1(1.0), h);
    const double taylor = 1 + h + h * h / 2 + h * h * h / 6 + h * h * h * h / 24;
    CHECK(std::abs(y[0] - taylor) <= 1e-9);
    CHECK(y[0] == doctest::Approx(1.105170833).epsilon(1e-9));
}

TEST_CASE("implicit tableau through the stacked solve") {
    // implicit midpoint on the oscillator is the Cayley transform
    Mat a(1, 1);
    a(0, 0) = 0.5;
    const ButcherTableau mid(a, Vec::Ones(1));
    CHECK(!mid.is_explicit());
    const double h = 0.2;
    Mat2 A;
    A << 0, 1, -1, 0;
    const Mat2 M = (Mat2::Identity() - h / 2 * A).inverse() * (Mat2::Identity() + h / 2 * A);
    const Vec x = v2(0.3, 0.8);
    CHECK((rk_step(mid, ho, x, h) - M * x).norm() <= 1e-12);
}

TEST_CASE("prk_step reproduces symplectic Euler") {
    const auto tab = PartitionedTableau::symplectic_euler();
    oracle::Rng rng(43);
    for (int i = 0; i < 20; ++i) {
        const Vec q = v1(rng.uniform(-1, 1)), v = v1(rng.uniform(-1, 1));
        const double h = rng.uniform(0.01, 0.3);
        auto [qp, vp] = prk_step(tab, ho_f1, ho_f2, q, v, h);
        auto [qa, va] = symplectic_euler_a_step(ho_f1, ho_f2, q, v, h);
        CHECK(std::abs(qp[0] - qa[0]) <= 1e-12);
        CHECK(std::abs(vp[0] - va[0]) <= 1e-12);
    }
    auto [q0, v0] = prk_step(tab, zero_f, zero_f, v1(2), v1(3), 0.1);
    CHECK(q0 == v1(2));
    CHECK(v0 == v1(3));
}

TEST_CASE("prk_step Stormer-Verlet") {
    const auto sv = PartitionedTableau::stormer_verlet();
    const double h = 0.1;
    // velocity Verlet on a separable system
    const auto verlet = [&](const PartField& f2, const Vec& q, const Vec& v) {
        const Vec vh = v + h / 2 * f2(q, v);
        const Vec q1 = q + h * vh;
        return std::make_pair(q1, Vec(vh + h / 2 * f2(q1, v)));
    };
    const PartField kep = [](const Vec& q, const Vec&) -> Vec { return -q / std::pow(q.norm(), 3); };
    const Vec q = v2(1.0, 0.1), v = v2(0.05, 0.5);
    auto [qs, vs] = prk_step(sv, ho_f1, kep, q, v, h);
    auto [qr, vr] = verlet(kep, q, v);
    CHECK((qs - qr).norm() <= 1e-12);
    CHECK((vs - vr).norm() <= 1e-12);

    // the two-stage tableau with a = [[0,0],[1,0]] also yields Verlet on separable fields
    auto [qp, vp] = prk_step(printed_sv(), ho_f1, kep, q, v, h);
    CHECK((qp - qr).norm() <= 1e-12);
    CHECK((vp - vr).norm() <= 1e-12);

    const Mat2 S = one_step_matrix([&](const Vec& a, const Vec& b) { return prk_step(sv, ho_f1, ho_f2, a, b, h); });
    CHECK((S.transpose() * J2() * S - J2()).norm() <= 1e-12);

    auto [qz, vz] = prk_step(sv, zero_f, zero_f, v1(2), v1(3), 0.1);
    CHECK(qz == v1(2));
    CHECK(vz == v1(3));
}

TEST_CASE("order conditions") {
    CHECK(check_order_conditions(ButcherTableau::explicit_euler(), 1));
    CHECK(!check_order_conditions(ButcherTableau::explicit_euler(), 2));
    CHECK(check_order_conditions(ButcherTableau::implicit_euler(), 1));
    CHECK(check_order_conditions(ButcherTableau::explicit_midpoint(), 2));
    CHECK(!check_order_conditions(ButcherTableau::explicit_midpoint(), 3));
    for (int p = 1; p <= 3; ++p) CHECK(check_order_conditions(ButcherTableau::rk4(), p));
    const ButcherTableau bad(Mat::Zero(2, 2), Vec::Constant(2, 0.4));
    CHECK(!check_order_conditions(bad, 1));
    CHECK_THROWS_AS(check_order_conditions(ButcherTableau::rk4(), 4), InvalidParameter);
    CHECK_THROWS_AS(ButcherTableau(Mat::Zero(2, 3), Vec::Zero(2)), DimMismatch);
}

TEST_CASE("symplecticity conditions") {
    CHECK(check_symplectic_prk(PartitionedTableau::symplectic_euler()));
    CHECK(check_symplectic_prk(PartitionedTableau::stormer_verlet()));
    const auto m = ButcherTableau::explicit_midpoint();
    CHECK(!check_symplectic_prk(PartitionedTableau(m.a, m.b, m.a, m.b)));
    // the a = [[0,0],[1,0]] variant violates the i = j = 2 condition
    CHECK(!check_symplectic_prk(printed_sv()));
}

TEST_CASE("newton_solve") {
    // one iteration for an affine residual; the wider difference step keeps
    // the rounding in the Jacobian below tol
    NewtonSettings one;
    one.max_iter = 1;
    one.fd_step = 1e-3;
    const Vec r = newton_solve([](const Vec& x) -> Vec { return x - v1(2.0); }, v1(0.0), one);
    CHECK(std::abs(r[0] - 2.0) <= 1e-12);

    const Vec s = newton_solve([](const Vec& x) -> Vec { return x.cwiseProduct(x) - v1(4.0); }, v1(3.0));
    CHECK(std::abs(s[0] - 2.0) <= 1e-12);

    CHECK_THROWS_AS(newton_solve([](const Vec&) -> Vec { return v1(1.0); }, v1(0.0)), SingularJacobian);

    NewtonSettings few;
    few.max_iter = 2;
    try {
        newton_solve([](const Vec& x) -> Vec { return v1(std::atan(x[0]) - 1.5); }, v1(0.0), few);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.iterations() == 2);
        CHECK(e.residual() > 1e-12);
    }

    NewtonSettings bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}
