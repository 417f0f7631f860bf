#include "geomech/geometry.hpp"

#include <string>

#include "geomech/errors.hpp"

namespace geomech {

namespace {

void check_dims(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimMismatch(static_cast<std::size_t>(a.size()), static_cast<std::size_t>(b.size()));
}

}  // namespace

FlatRetraction::FlatRetraction(int dim) : n(dim) {
    if (dim <= 0) throw InvalidParameter("retraction dimension must be positive");
}

Vec FlatRetraction::retract(const Vec& x, const Vec& v) const {
    check_dims(x, v);
    if (x.size() != n) throw DimMismatch(static_cast<std::size_t>(x.size()), static_cast<std::size_t>(n));
    return x + v;
}

Rotation TrivializedRetraction::tau(const Vec3& xi) const {
    return tag_ == RetractionTag::Exp ? exp_so3(xi) : cay_so3(0.5 * xi);
}

Vec3 TrivializedRetraction::tau_inv(const Rotation& R) const {
    try {
        return tag_ == RetractionTag::Exp ? log_so3(R) : Vec3(2.0 * cay_inv_so3(R));
    } catch (const NearPiRotation&) {
        throw OutOfChart("rotation angle near pi");
    } catch (const SingularCayley&) {
        throw OutOfChart("I + R singular");
    }
}

Mat3 TrivializedRetraction::dual(const Vec3& xi) const {
    if (tag_ == RetractionTag::Exp) return dexp_dual_matrix(xi);
    const Vec3 w = 0.5 * xi;
    const DualCayley d = dcay_dual_matrix(w);
    return d.matrix / (2.0 * d.scale);
}

DiscretizationParams::DiscretizationParams(double th, double s_) : theta(th), s(s_) {
    if (!(th >= 0.0 && th <= 1.0)) throw InvalidParameter("theta outside [0,1]");
    if (!(s_ >= 0.0 && s_ <= 1.0)) throw InvalidParameter("s outside [0,1]");
}

std::pair<Vec, Vec> flat_discretize(const Vec& x, const Vec& v, double theta) {
    check_dims(x, v);
    return {x - theta * v, x + (1.0 - theta) * v};
}

std::pair<Vec, Vec> flat_discretize_inverse(const Vec& a, const Vec& b, double theta) {
    check_dims(a, b);
    return {(1.0 - theta) * a + theta * b, b - a};
}

std::pair<Rotation, Rotation> triv_discretize(const Rotation& g, const Vec3& xi, double s,
                                              const TrivializedRetraction& ret) {
    return {g * ret.tau(-s * xi), g * ret.tau((1.0 - s) * xi)};
}

TrivDiscInverse triv_disc_inverse_left(const Rotation& g_k, const Vec3& mu_k, const Rotation& g_k1,
                                       const Vec3& mu_k1, const TrivializedRetraction& ret) {
    const Rotation h = g_k.inverse() * g_k1;
    const Vec3 xi = ret.tau_inv(h);
    return {g_k, ret.dual(xi) * mu_k1, xi, Vec3(h.matrix() * mu_k1 - mu_k)};
}

TrivDiscInverse triv_disc_inverse_right(const Rotation& g_k, const Vec3& mu_k, const Rotation& g_k1,
                                        const Vec3& mu_k1, const TrivializedRetraction& ret) {
    const Rotation h = g_k.inverse() * g_k1;
    const Vec3 xi = ret.tau_inv(h);
    return {g_k, ret.dual(xi) * Ad_star_so3(g_k1, mu_k1), xi, Vec3(mu_k1 - mu_k)};
}

LocalSecondOrderPoint::LocalSecondOrderPoint(Vec q_, Vec a, Vec b, Vec c)
    : q(std::move(q_)), s1(std::move(a)), s2(std::move(b)), s3(std::move(c)) {
    check_dims(q, s1);
    check_dims(q, s2);
    check_dims(q, s3);
}

bool operator==(const LocalSecondOrderPoint& a, const LocalSecondOrderPoint& b) {
    return a.q == b.q && a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
}

LocalSecondOrderPoint canonical_flip(const LocalSecondOrderPoint& p) {
    return {p.q, p.s2, p.s1, p.s3};
}

LocalSecondOrderPoint alpha_local(const LocalSecondOrderPoint& p) {
    return {p.q, p.s2, p.s3, p.s1};
}

LocalSecondOrderPoint alpha_local_inverse(const LocalSecondOrderPoint& p) {
    return {p.q, p.s3, p.s1, p.s2};
}

LocalSecondOrderPoint beta_local(const LocalSecondOrderPoint& p) {
    return {p.q, p.s1, p.s3, -p.s2};
}

LocalSecondOrderPoint beta_local_inverse(const LocalSecondOrderPoint& p) {
    return {p.q, p.s1, -p.s3, p.s2};
}

}  // namespace geomech
