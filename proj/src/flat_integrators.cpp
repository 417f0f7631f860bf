#include "geomech/errors.hpp"
#include "geomech/integrators.hpp"

namespace geomech {

Vec implicit_disc_step(const VectorField& f, double theta, const Vec& x, double h,
                       const NewtonSettings& settings) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidParameter("theta outside [0,1]");
    if (theta == 0.0) return x + h * f(x);
    return newton_solve(
        [&](const Vec& y) -> Vec { return y - x - h * f((1.0 - theta) * x + theta * y); }, x, settings);
}

std::pair<Vec, Vec> cotangent_theta_step(const PartField& f1, const PartField& f2, const Vec& q,
                                         const Vec& p, double h, double theta,
                                         const NewtonSettings& settings) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidParameter("theta outside [0,1]");
    if (q.size() != p.size())
        throw DimMismatch(static_cast<std::size_t>(q.size()), static_cast<std::size_t>(p.size()));
    if (theta == 0.0) return symplectic_euler_a_step(f1, f2, q, p, h, settings);
    if (theta == 1.0) return symplectic_euler_b_step(f1, f2, q, p, h, settings);

    const Eigen::Index n = q.size();
    Vec z0(2 * n);
    z0 << q, p;
    const Vec z = newton_solve(
        [&](const Vec& zz) -> Vec {
            const Vec q1 = zz.head(n);
            const Vec p1 = zz.tail(n);
            const Vec Q = (1.0 - theta) * q + theta * q1;
            const Vec P = theta * p + (1.0 - theta) * p1;
            Vec r(2 * n);
            r << q1 - q - h * f1(Q, P), p1 - p - h * f2(Q, P);
            return r;
        },
        z0, settings);
    return {z.head(n), z.tail(n)};
}

}  // namespace geomech
