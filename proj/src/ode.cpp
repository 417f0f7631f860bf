#include "geomech/ode.hpp"

#include <algorithm>
#include <cmath>

#include "geomech/errors.hpp"

namespace geomech {

namespace {

constexpr double kCondTol = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kCondTol; }

bool strictly_lower(const Mat& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = i; j < a.cols(); ++j)
            if (a(i, j) != 0.0) return false;
    return true;
}

void require_same(Eigen::Index a, Eigen::Index b) {
    if (a != b) throw DimMismatch(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

}  // namespace

void NewtonSettings::validate() const {
    if (!(tol > 0.0)) throw InvalidParameter("newton tol must be positive");
    if (max_iter < 1) throw InvalidParameter("newton max_iter must be positive");
    if (!(fd_step > 0.0)) throw InvalidParameter("newton fd_step must be positive");
}

Vec newton_solve(const Residual& residual, const Vec& x0, const NewtonSettings& settings) {
    settings.validate();
    const Eigen::Index n = x0.size();
    Vec x = x0;
    for (int it = 0;; ++it) {
        const Vec r = residual(x);
        require_same(r.size(), n);
        const double rn = r.lpNorm<Eigen::Infinity>();
        if (!std::isfinite(rn)) throw NoConvergence(it, rn);
        if (rn <= settings.tol) return x;
        if (it == settings.max_iter) throw NoConvergence(it, rn);

        Mat J(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double e = settings.fd_step * std::max(1.0, std::abs(x[j]));
            Vec xp = x;
            Vec xm = x;
            xp[j] += e;
            xm[j] -= e;
            J.col(j) = (residual(xp) - residual(xm)) / (xp[j] - xm[j]);
        }
        Eigen::FullPivLU<Mat> lu(J);
        if (!lu.isInvertible()) throw SingularJacobian();
        x -= lu.solve(r);
    }
}

ButcherTableau::ButcherTableau(Mat a_, Vec b_) : a(std::move(a_)), b(std::move(b_)) {
    require_same(a.rows(), a.cols());
    require_same(a.rows(), b.size());
    if (b.size() == 0) throw InvalidParameter("tableau needs at least one stage");
}

bool ButcherTableau::is_explicit() const { return strictly_lower(a); }

ButcherTableau ButcherTableau::explicit_euler() { return {Mat::Zero(1, 1), Vec::Ones(1)}; }

ButcherTableau ButcherTableau::implicit_euler() { return {Mat::Ones(1, 1), Vec::Ones(1)}; }

ButcherTableau ButcherTableau::explicit_midpoint() {
    Mat a = Mat::Zero(2, 2);
    a(1, 0) = 0.5;
    Vec b(2);
    b << 0.0, 1.0;
    return {a, b};
}

ButcherTableau ButcherTableau::rk4() {
    Mat a = Mat::Zero(4, 4);
    a(1, 0) = 0.5;
    a(2, 1) = 0.5;
    a(3, 2) = 1.0;
    Vec b(4);
    b << 1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0;
    return {a, b};
}

PartitionedTableau::PartitionedTableau(Mat a_, Vec b_, Mat ah, Vec bh)
    : a(std::move(a_)), b(std::move(b_)), a_hat(std::move(ah)), b_hat(std::move(bh)) {
    require_same(a.rows(), a.cols());
    require_same(a.rows(), b.size());
    require_same(a_hat.rows(), a_hat.cols());
    require_same(a_hat.rows(), b_hat.size());
    require_same(b.size(), b_hat.size());
    if (b.size() == 0) throw InvalidParameter("tableau needs at least one stage");
}

PartitionedTableau PartitionedTableau::symplectic_euler() {
    return {Mat::Zero(1, 1), Vec::Ones(1), Mat::Ones(1, 1), Vec::Ones(1)};
}

PartitionedTableau PartitionedTableau::stormer_verlet() {
    Mat a = Mat::Zero(2, 2);
    a(1, 0) = 0.5;
    a(1, 1) = 0.5;
    Mat ah = Mat::Zero(2, 2);
    ah(0, 0) = 0.5;
    ah(1, 0) = 0.5;
    Vec b = Vec::Constant(2, 0.5);
    return {a, b, ah, b};
}

Vec explicit_euler_step(const VectorField& f, const Vec& x, double h) { return x + h * f(x); }

Vec implicit_euler_step(const VectorField& f, const Vec& x, double h, const NewtonSettings& settings) {
    return newton_solve([&](const Vec& y) -> Vec { return y - x - h * f(y); }, x, settings);
}

std::pair<Vec, Vec> symplectic_euler_a_step(const PartField& f1, const PartField& f2, const Vec& q,
                                            const Vec& v, double h, const NewtonSettings& settings) {
    require_same(q.size(), v.size());
    const Vec v1 =
        newton_solve([&](const Vec& w) -> Vec { return w - v - h * f2(q, w); }, v, settings);
    return {q + h * f1(q, v1), v1};
}

std::pair<Vec, Vec> symplectic_euler_b_step(const PartField& f1, const PartField& f2, const Vec& q,
                                            const Vec& v, double h, const NewtonSettings& settings) {
    require_same(q.size(), v.size());
    const Vec q1 =
        newton_solve([&](const Vec& w) -> Vec { return w - q - h * f1(w, v); }, q, settings);
    return {q1, v + h * f2(q1, v)};
}

Vec rk_step(const ButcherTableau& tab, const VectorField& f, const Vec& x, double h,
            const NewtonSettings& settings) {
    const int s = tab.stages();
    const Eigen::Index n = x.size();
    Mat K(n, s);
    if (tab.is_explicit()) {
        for (int i = 0; i < s; ++i) {
            Vec xi = x;
            for (int j = 0; j < i; ++j)
                if (tab.a(i, j) != 0.0) xi += h * tab.a(i, j) * K.col(j);
            K.col(i) = f(xi);
        }
    } else {
        const Vec f0 = f(x);
        Vec k0(n * s);
        for (int i = 0; i < s; ++i) k0.segment(i * n, n) = f0;
        const Vec k = newton_solve(
            [&](const Vec& kk) -> Vec {
                Vec r(n * s);
                for (int i = 0; i < s; ++i) {
                    Vec xi = x;
                    for (int j = 0; j < s; ++j) xi += h * tab.a(i, j) * kk.segment(j * n, n);
                    r.segment(i * n, n) = kk.segment(i * n, n) - f(xi);
                }
                return r;
            },
            k0, settings);
        for (int i = 0; i < s; ++i) K.col(i) = k.segment(i * n, n);
    }
    Vec incr = tab.b(0) * K.col(0);
    for (int i = 1; i < s; ++i) incr += tab.b(i) * K.col(i);
    return x + h * incr;
}

std::pair<Vec, Vec> prk_step(const PartitionedTableau& tab, const PartField& f1, const PartField& f2,
                             const Vec& q, const Vec& p, double h, const NewtonSettings& settings) {
    require_same(q.size(), p.size());
    const int s = tab.stages();
    const Eigen::Index n = q.size();
    const Eigen::Index m = n * s;

    auto stage_points = [&](const Vec& kl, int i) {
        Vec Qi = q;
        Vec Pi = p;
        for (int j = 0; j < s; ++j) {
            Qi += h * tab.a(i, j) * kl.segment(j * n, n);
            Pi += h * tab.a_hat(i, j) * kl.segment(m + j * n, n);
        }
        return std::make_pair(Qi, Pi);
    };

    Vec kl = Vec::Zero(2 * m);
    if (strictly_lower(tab.a) && strictly_lower(tab.a_hat)) {
        for (int i = 0; i < s; ++i) {
            const auto [Qi, Pi] = stage_points(kl, i);
            kl.segment(i * n, n) = f1(Qi, Pi);
            kl.segment(m + i * n, n) = f2(Qi, Pi);
        }
    } else {
        const Vec k0 = f1(q, p);
        const Vec l0 = f2(q, p);
        for (int i = 0; i < s; ++i) {
            kl.segment(i * n, n) = k0;
            kl.segment(m + i * n, n) = l0;
        }
        kl = newton_solve(
            [&](const Vec& z) -> Vec {
                Vec r(2 * m);
                for (int i = 0; i < s; ++i) {
                    const auto [Qi, Pi] = stage_points(z, i);
                    r.segment(i * n, n) = z.segment(i * n, n) - f1(Qi, Pi);
                    r.segment(m + i * n, n) = z.segment(m + i * n, n) - f2(Qi, Pi);
                }
                return r;
            },
            kl, settings);
    }
    Vec dq = tab.b(0) * kl.segment(0, n);
    Vec dp = tab.b_hat(0) * kl.segment(m, n);
    for (int i = 1; i < s; ++i) {
        dq += tab.b(i) * kl.segment(i * n, n);
        dp += tab.b_hat(i) * kl.segment(m + i * n, n);
    }
    return {q + h * dq, p + h * dp};
}

bool check_order_conditions(const ButcherTableau& tab, int order) {
    if (order < 1 || order > 3) throw InvalidParameter("order conditions are available for orders 1-3");
    const Vec& b = tab.b;
    const Vec c = tab.a.rowwise().sum();
    if (!near(b.sum(), 1.0)) return false;
    if (order >= 2 && !near(b.dot(c), 0.5)) return false;
    if (order >= 3) {
        if (!near(b.dot(c.cwiseProduct(c)), 1.0 / 3.0)) return false;
        if (!near(b.dot(tab.a * c), 1.0 / 6.0)) return false;
    }
    return true;
}

bool check_symplectic_prk(const PartitionedTableau& tab) {
    const int s = tab.stages();
    for (int i = 0; i < s; ++i) {
        if (!near(tab.b(i), tab.b_hat(i))) return false;
        for (int j = 0; j < s; ++j) {
            const double v = tab.b(i) * tab.a_hat(i, j) + tab.b_hat(j) * tab.a(j, i) - tab.b(i) * tab.b_hat(j);
            if (!near(v, 0.0)) return false;
        }
    }
    return true;
}

}  // namespace geomech
