#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>

namespace geomech {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

using VectorField = std::function<Vec(const Vec&)>;
/// Right-hand side of one block of a partitioned system, f(q, p).
using PartField = std::function<Vec(const Vec&, const Vec&)>;
using Residual = std::function<Vec(const Vec&)>;

struct NewtonSettings {
    double tol = 1e-12;  // infinity norm of the residual
    int max_iter = 50;
    double fd_step = 1e-7;

    void validate() const;
};

/// Newton iteration with a central-difference Jacobian.
/// Throws NoConvergence or SingularJacobian.
Vec newton_solve(const Residual& residual, const Vec& x0, const NewtonSettings& settings = {});

struct ButcherTableau {
    ButcherTableau(Mat a, Vec b);
    Mat a;
    Vec b;

    int stages() const { return static_cast<int>(b.size()); }
    bool is_explicit() const;

    static ButcherTableau explicit_euler();
    static ButcherTableau implicit_euler();
    static ButcherTableau explicit_midpoint();
    static ButcherTableau rk4();
};

/// (a, b) act on q, (a_hat, b_hat) on p.
struct PartitionedTableau {
    PartitionedTableau(Mat a, Vec b, Mat a_hat, Vec b_hat);
    Mat a;
    Vec b;
    Mat a_hat;
    Vec b_hat;

    int stages() const { return static_cast<int>(b.size()); }

    static PartitionedTableau symplectic_euler();
    static PartitionedTableau stormer_verlet();
};

Vec explicit_euler_step(const VectorField& f, const Vec& x, double h);
Vec implicit_euler_step(const VectorField& f, const Vec& x, double h, const NewtonSettings& settings = {});

/// q' = q + h f1(q, v'), v' = v + h f2(q, v')
std::pair<Vec, Vec> symplectic_euler_a_step(const PartField& f1, const PartField& f2, const Vec& q,
                                            const Vec& v, double h, const NewtonSettings& settings = {});

/// q' = q + h f1(q', v), v' = v + h f2(q', v)
std::pair<Vec, Vec> symplectic_euler_b_step(const PartField& f1, const PartField& f2, const Vec& q,
                                            const Vec& v, double h, const NewtonSettings& settings = {});

Vec rk_step(const ButcherTableau& tab, const VectorField& f, const Vec& x, double h,
            const NewtonSettings& settings = {});

std::pair<Vec, Vec> prk_step(const PartitionedTableau& tab, const PartField& f1, const PartField& f2,
                             const Vec& q, const Vec& p, double h, const NewtonSettings& settings = {});

/// order in {1, 2, 3}; every condition up to that order within 1e-12.
bool check_order_conditions(const ButcherTableau& tab, int order);

/// b_i = b_hat_i and b_i a_hat_ij + b_hat_j a_ji - b_i b_hat_j = 0, within 1e-12.
bool check_symplectic_prk(const PartitionedTableau& tab);

}  // namespace geomech
