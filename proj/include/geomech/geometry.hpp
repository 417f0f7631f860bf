#pragma once

#include <Eigen/Dense>
#include <utility>

#include "geomech/so3.hpp"

namespace geomech {

using Vec = Eigen::VectorXd;

/// R(x, v) = x + v on R^n.
struct FlatRetraction {
    explicit FlatRetraction(int n);
    int n;
    Vec retract(const Vec& x, const Vec& v) const;
};

enum class RetractionTag { Exp, Cayley };

/// Local diffeomorphism tau: so(3) -> SO(3) used to left-trivialize a
/// retraction, R(g, xi) = g tau(xi).
///
/// The Cayley variant is tau(xi) = cay_so3(xi / 2) so that tau'(0) is the
/// identity.
class TrivializedRetraction {
public:
    explicit TrivializedRetraction(RetractionTag tag) : tag_(tag) {}
    static TrivializedRetraction exp() { return TrivializedRetraction(RetractionTag::Exp); }
    static TrivializedRetraction cayley() { return TrivializedRetraction(RetractionTag::Cayley); }

    RetractionTag tag() const { return tag_; }
    Rotation tau(const Vec3& xi) const;
    Vec3 tau_inv(const Rotation& R) const;  // throws OutOfChart

    /// Matrix of the dual left logarithmic derivative of tau at xi.
    Mat3 dual(const Vec3& xi) const;

private:
    RetractionTag tag_;
};

struct DiscretizationParams {
    explicit DiscretizationParams(double theta = 0.0, double s = 0.0);
    double theta;
    double s;
};

/// (x - theta v, x + (1 - theta) v)
std::pair<Vec, Vec> flat_discretize(const Vec& x, const Vec& v, double theta);

/// Returns (x, v) with x = (1 - theta) a + theta b and v = b - a.
std::pair<Vec, Vec> flat_discretize_inverse(const Vec& a, const Vec& b, double theta);

/// (g tau(-s xi), g tau((1 - s) xi))
std::pair<Rotation, Rotation> triv_discretize(const Rotation& g, const Vec3& xi, double s,
                                              const TrivializedRetraction& ret);

/// Base point (g, mu) and fiber (xi, dmu) of the inverse of the
/// cotangent-lifted trivialized discretization.
struct TrivDiscInverse {
    Rotation g;
    Vec3 mu;
    Vec3 xi;
    Vec3 dmu;
};

TrivDiscInverse triv_disc_inverse_left(const Rotation& g_k, const Vec3& mu_k, const Rotation& g_k1,
                                       const Vec3& mu_k1, const TrivializedRetraction& ret);

/// Momenta are spatial for the right lift.
TrivDiscInverse triv_disc_inverse_right(const Rotation& g_k, const Vec3& mu_k, const Rotation& g_k1,
                                        const Vec3& mu_k1, const TrivializedRetraction& ret);

struct LocalSecondOrderPoint {
    LocalSecondOrderPoint(Vec q, Vec s1, Vec s2, Vec s3);
    Vec q;
    Vec s1;
    Vec s2;
    Vec s3;
};

bool operator==(const LocalSecondOrderPoint& a, const LocalSecondOrderPoint& b);

// (q, qdot, dq, dqdot) -> (q, dq, qdot, dqdot)
LocalSecondOrderPoint canonical_flip(const LocalSecondOrderPoint& p);

// (q, p, qdot, pdot) -> (q, qdot, pdot, p)
LocalSecondOrderPoint alpha_local(const LocalSecondOrderPoint& p);
LocalSecondOrderPoint alpha_local_inverse(const LocalSecondOrderPoint& p);

// (q, p, qdot, pdot) -> (q, p, pdot, -qdot)
LocalSecondOrderPoint beta_local(const LocalSecondOrderPoint& p);
LocalSecondOrderPoint beta_local_inverse(const LocalSecondOrderPoint& p);

}  // namespace geomech
