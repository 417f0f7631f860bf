#pragma once

#include <algorithm>
#include <cmath>

#include "geomech/errors.hpp"
#include "geomech/ode.hpp"
#include "geomech/so3.hpp"

namespace geomech::detail {

// Newton on a 3-vector unknown with a central-difference Jacobian.
template <class F>
Vec3 newton3(F&& residual, Vec3 x, const NewtonSettings& s) {
    s.validate();
    for (int it = 0;; ++it) {
        const Vec3 r = residual(x);
        const double rn = r.lpNorm<Eigen::Infinity>();
        if (!std::isfinite(rn)) throw NoConvergence(it, rn);
        if (rn <= s.tol) return x;
        if (it == s.max_iter) throw NoConvergence(it, rn);
        Mat3 J;
        for (int j = 0; j < 3; ++j) {
            const double e = s.fd_step * std::max(1.0, std::abs(x[j]));
            Vec3 xp = x;
            Vec3 xm = x;
            xp[j] += e;
            xm[j] -= e;
            J.col(j) = (residual(xp) - residual(xm)) / (xp[j] - xm[j]);
        }
        try {
            x -= solve3(J, r);
        } catch (const SingularMatrix&) {
            throw SingularJacobian();
        }
    }
}

}  // namespace geomech::detail
