#include "geomech/bench/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "geomech/integrators.hpp"

namespace geomech::bench {

namespace {

// central-difference left logarithmic derivative of exp at y
Mat3 fd_left_dexp(const Vec3& y, double e) {
    const Mat3 Et = exp_so3(y).matrix().transpose();
    Mat3 out;
    for (int j = 0; j < 3; ++j) {
        Vec3 d = Vec3::Zero();
        d[j] = e;
        const Mat3 S = Et * (exp_so3(y + d).matrix() - exp_so3(y - d).matrix()) / (2.0 * e);
        out.col(j) = Vec3(S(2, 1), S(0, 2), S(1, 0));
    }
    return out;
}

bool check_dexp_pairing() {
    const Vec3 y(0.3, -0.7, 0.5);
    return (dexp_dual_matrix(y) - fd_left_dexp(y, 1e-5).transpose()).cwiseAbs().maxCoeff() < 1e-6;
}

bool check_round_trips() {
    const Vec3 v(0.4, -1.1, 0.9);
    const bool e = (log_so3(exp_so3(v)) - v).norm() < 1e-10;
    const bool c = (cay_inv_so3(cay_so3(v)) - v).norm() < 1e-10;
    return e && c;
}

bool check_symplectic_euler() {
    const HarmonicOscillatorParams p;
    const PartField f1 = [](const Vec&, const Vec& v) -> Vec { return v; };
    const PartField f2 = [p](const Vec& q, const Vec&) -> Vec { return -p.k / p.m * q; };
    Eigen::Matrix2d S;
    for (int j = 0; j < 2; ++j) {
        const auto [q, v] = symplectic_euler_a_step(f1, f2, Vec::Constant(1, j == 0 ? 1.0 : 0.0),
                                                    Vec::Constant(1, j == 1 ? 1.0 : 0.0), 0.1);
        S.col(j) << q[0], v[0];
    }
    Eigen::Matrix2d J;
    J << 0.0, 1.0, -1.0, 0.0;
    return (S.transpose() * J * S - J).cwiseAbs().maxCoeff() < 1e-12;
}

bool check_tableaux() {
    return check_order_conditions(ButcherTableau::rk4(), 3) &&
           !check_order_conditions(ButcherTableau::explicit_euler(), 2) &&
           check_symplectic_prk(PartitionedTableau::symplectic_euler()) &&
           check_symplectic_prk(PartitionedTableau::stormer_verlet());
}

bool check_rigidbody_casimir() {
    const RigidBodyParams p{Inertia::diagonal(1.0, 10.0, 100.0)};
    RigidBodyState s{Rotation(), Vec3(1.0, 1.0, 1.0)};
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
        s = rigidbody_exp_step(p, s.R, s.Pi, 0.01);
        worst = std::max(worst, std::abs(s.Pi.squaredNorm() - 3.0));
    }
    return worst < 1e-12;
}

bool check_heavytop_casimirs() {
    HeavyTopParams p;
    p.inertia = Inertia::diagonal(1.0, 10.0, 100.0);
    HeavyTopState s = make_heavytop_state(Rotation(), Vec3::Zero(), Vec3(1.0, 1.0, 1.0), Vec3(0.0, 0.0, 1.0));
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
        s = heavytop_exp_step(p, s, 0.01);
        worst = std::max({worst, std::abs(s.Gamma.squaredNorm() - 1.0), std::abs(s.Pi.dot(s.Gamma) - 1.0)});
    }
    return worst < 1e-11;
}

bool check_kepler_angmom() {
    const KeplerParams p;
    const PartField f1 = [](const Vec&, const Vec& v) -> Vec { return v; };
    const PartField f2 = [p](const Vec& q, const Vec&) -> Vec {
        return -p.mu / std::pow(q.norm(), 3) * q;
    };
    const auto tab = PartitionedTableau::stormer_verlet();
    Vec q(2), v(2);
    q << 1.0, 0.0;
    v << 0.0, 0.5;
    const double L0 = q[0] * v[1] - q[1] * v[0];
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        std::tie(q, v) = prk_step(tab, f1, f2, q, v, 0.01);
        worst = std::max(worst, std::abs(q[0] * v[1] - q[1] * v[0] - L0));
    }
    return worst < 1e-12;
}

}  // namespace

bool run_selfcheck(std::ostream& out) {
    const std::vector<std::pair<std::string, std::function<bool()>>> checks{
        {"dexp dual pairing", check_dexp_pairing},
        {"exp/log and cay/cay_inv round trips", check_round_trips},
        {"symplectic Euler preserves J", check_symplectic_euler},
        {"tableau conditions", check_tableaux},
        {"rigid body Casimir", check_rigidbody_casimir},
        {"heavy top Casimirs", check_heavytop_casimirs},
        {"Kepler angular momentum", check_kepler_angmom},
    };
    bool all = true;
    for (const auto& [label, fn] : checks) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            out << "  error: " << e.what() << '\n';
        }
        out << (ok ? "ok    " : "FAIL  ") << label << '\n';
        all = all && ok;
    }
    return all;
}

}  // namespace geomech::bench
