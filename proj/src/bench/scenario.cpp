#include "geomech/bench/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "geomech/errors.hpp"
#include "geomech/integrators.hpp"

namespace geomech::bench {

namespace {

const std::vector<std::string> kRotationCols{"R11", "R12", "R13", "R21", "R22", "R23", "R31", "R32", "R33"};

std::vector<std::string> with_rotation(std::vector<std::string> tail) {
    std::vector<std::string> out = kRotationCols;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

void push_rotation(std::vector<double>& v, const Mat3& R) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(R(i, j));
}

void push_vec(std::vector<double>& v, const Vec3& x) { v.insert(v.end(), {x.x(), x.y(), x.z()}); }

// uniform draws in [-a, a] from a fixed generator, independent of the
// standard library's distribution implementation
class Perturbation {
public:
    Perturbation(std::uint64_t seed, double amplitude) : gen_(seed), a_(amplitude) {}
    double next() {
        if (a_ == 0.0) return 0.0;
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return a_ * (2.0 * u - 1.0);
    }
    Vec3 next3() {
        const double x = next();
        const double y = next();
        return {x, y, next()};
    }

private:
    std::mt19937_64 gen_;
    double a_;
};

Inertia inertia_from(const ScenarioConfig& c) {
    return Inertia::diagonal(c.param("I1", 1.0), c.param("I2", 10.0), c.param("I3", 100.0));
}

Vec3 vec_param(const ScenarioConfig& c, const std::string& prefix, const Vec3& fallback) {
    return {c.param(prefix + "1", fallback.x()), c.param(prefix + "2", fallback.y()),
            c.param(prefix + "3", fallback.z())};
}

template <class State, class Step, class Emit>
Trajectory drive(const ScenarioConfig& c, State s, Step&& step, Emit&& emit) {
    Trajectory out;
    out.scenario = c.scenario;
    out.columns = scenario_columns(c.scenario);
    out.records.reserve(static_cast<std::size_t>(c.steps));
    for (long k = 1; k <= c.steps; ++k) {
        TrajectoryRecord r;
        r.step = k;
        r.t = static_cast<double>(k) * c.dt;
        try {
            s = step(s);
            r.values = emit(s);
        } catch (const Error& e) {
            throw IntegratorFailure(k, e.what());
        }
        out.records.push_back(std::move(r));
    }
    return out;
}

struct FlatSystem {
    VectorField f;
    Eigen::Index n;  // half dimension for partitioned systems
    bool partitioned;
};

std::function<Vec(const Vec&)> flat_stepper(const ScenarioConfig& c, const FlatSystem& sys,
                                            const NewtonSettings& ns) {
    const double h = c.dt;
    const Eigen::Index n = sys.n;
    const VectorField f = sys.f;
    const PartField f1 = [f, n](const Vec& q, const Vec& v) -> Vec {
        Vec x(2 * n);
        x << q, v;
        return f(x).head(n);
    };
    const PartField f2 = [f, n](const Vec& q, const Vec& v) -> Vec {
        Vec x(2 * n);
        x << q, v;
        return f(x).tail(n);
    };
    auto join = [n](const std::pair<Vec, Vec>& qp) {
        Vec x(2 * n);
        x << qp.first, qp.second;
        return x;
    };
    switch (c.integrator) {
        case Integrator::ExplicitEuler:
            return [=](const Vec& x) { return explicit_euler_step(f, x, h); };
        case Integrator::ImplicitEuler:
            return [=](const Vec& x) { return implicit_euler_step(f, x, h, ns); };
        case Integrator::Rk2:
            return [=, tab = ButcherTableau::explicit_midpoint()](const Vec& x) { return rk_step(tab, f, x, h, ns); };
        case Integrator::Rk4:
            return [=, tab = ButcherTableau::rk4()](const Vec& x) { return rk_step(tab, f, x, h, ns); };
        case Integrator::ThetaFamily:
            if (!sys.partitioned) return [=, th = c.theta](const Vec& x) { return implicit_disc_step(f, th, x, h, ns); };
            return [=, th = c.theta](const Vec& x) {
                return join(cotangent_theta_step(f1, f2, x.head(n), x.tail(n), h, th, ns));
            };
        case Integrator::SymplEulerA:
            return [=](const Vec& x) { return join(symplectic_euler_a_step(f1, f2, x.head(n), x.tail(n), h, ns)); };
        case Integrator::SymplEulerB:
            return [=](const Vec& x) { return join(symplectic_euler_b_step(f1, f2, x.head(n), x.tail(n), h, ns)); };
        case Integrator::StormerVerlet:
            return [=, tab = PartitionedTableau::stormer_verlet()](const Vec& x) {
                return join(prk_step(tab, f1, f2, x.head(n), x.tail(n), h, ns));
            };
        default:
            break;
    }
    throw IncompatiblePair(std::string(name(c.scenario)), std::string(name(c.integrator)));
}

Trajectory run_harmonic(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    HarmonicOscillatorParams p{c.param("k", 1.0), c.param("m", 1.0)};
    p.validate();
    Vec x(2);
    x << c.param("q0", 1.0), c.param("v0", 0.0) + pert.next();
    const auto step = flat_stepper(c, {[p](const Vec& y) { return ho_vectorfield(p, y); }, 1, true}, ns);
    return drive(c, x, step, [&](const Vec& y) { return std::vector<double>{y[0], y[1], ho_energy(p, y[0], y[1])}; });
}

Trajectory run_kepler(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    KeplerParams p{c.param("mu", 1.0)};
    p.validate();
    Vec x(4);
    x << c.param("r1", 1.0), c.param("r2", 0.0), c.param("v1", 0.0), c.param("v2", 0.5);
    x[2] += pert.next();
    x[3] += pert.next();
    const auto step = flat_stepper(c, {[p](const Vec& y) { return kepler_vectorfield(p, y); }, 2, true}, ns);
    return drive(c, x, step, [&](const Vec& y) {
        return std::vector<double>{y[0], y[1], y[2], y[3], kepler_energy(p, y), kepler_angmom(p, y)};
    });
}

Trajectory run_pendulum(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    PendulumParams p{c.param("ml2", 1.0), c.param("mgl", 1.0)};
    p.validate();
    const double th0 = c.param("theta0", 1.0);
    const bool project = c.param("project", 0.0) != 0.0;
    Vec x(3);
    x << std::cos(th0), std::sin(th0), c.param("p0", 0.0) + pert.next();
    const VectorField f = [p](const Vec& y) -> Vec { return pendulum_embedded_vf(p, Vec3(y[0], y[1], y[2])); };
    const auto inner = flat_stepper(c, {f, 3, false}, ns);
    const auto step = [&](const Vec& y) -> Vec {
        Vec y1 = inner(y);
        if (project) y1 = project_to_cylinder(Vec3(y1[0], y1[1], y1[2]));
        return y1;
    };
    return drive(c, x, step, [&](const Vec& y) {
        const Vec3 v(y[0], y[1], y[2]);
        return std::vector<double>{v.x(), v.y(), v.z(), pendulum_embedded_energy(p, v), cylinder_defect(v)};
    });
}

Trajectory run_rigidbody(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    const RigidBodyParams p{inertia_from(c)};
    const Vec3 Pi0 = vec_param(c, "Pi", Vec3(1.0, 1.0, 1.0)) + pert.next3();
    const double h = c.dt;
    const auto emit = [&](const RigidBodyState& s) {
        std::vector<double> v;
        v.reserve(14);
        push_rotation(v, s.R.matrix());
        push_vec(v, s.Pi);
        v.push_back(rigidbody_energy(p, s.Pi));
        v.push_back(rigidbody_casimir(s.Pi));
        return v;
    };
    const RigidBodyState s0{Rotation(), Pi0};
    switch (c.integrator) {
        case Integrator::LpExp:
            return drive(c, s0, [&](const RigidBodyState& s) { return rigidbody_exp_step(p, s.R, s.Pi, h, ns); },
                         emit);
        case Integrator::LpCayley:
            return drive(c, s0, [&](const RigidBodyState& s) { return rigidbody_cay_step(p, s.R, s.Pi, h, ns); },
                         emit);
        case Integrator::LpExpRight: {
            // carried state holds the spatial momentum
            const auto ret = TrivializedRetraction::exp();
            const RigidBodyState spatial0{s0.R, s0.R * s0.Pi};
            return drive(
                c, spatial0, [&](const RigidBodyState& s) { return lie_poisson_right_step(p, ret, s.R, s.Pi, h, ns); },
                [&](const RigidBodyState& s) { return emit({s.R, Vec3(s.R.matrix().transpose() * s.Pi)}); });
        }
        case Integrator::QuatRk4:
            return drive(c, s0, [&](const RigidBodyState& s) { return quat_rk4_step(p, s, h); }, emit);
        case Integrator::Rkmk4:
            return drive(c, s0, [&](const RigidBodyState& s) { return rkmk4_step(p, s, h); }, emit);
        default:
            break;
    }
    throw IncompatiblePair(std::string(name(c.scenario)), std::string(name(c.integrator)));
}

Trajectory run_heavytop(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    HeavyTopParams p;
    p.inertia = inertia_from(c);
    p.m = c.param("m", 1.0);
    p.g = c.param("g", 9.81);
    p.chi = vec_param(c, "chi", Vec3(0.0, 0.0, 1.0));
    p.validate();
    const Vec3 Pi0 = vec_param(c, "Pi", Vec3(1.0, 1.0, 1.0)) + pert.next3();
    const HeavyTopState s0 =
        make_heavytop_state(Rotation(), Vec3::Zero(), Pi0, vec_param(c, "Gamma", Vec3(0.0, 0.0, 1.0)));
    const double h = c.dt;
    const auto emit = [&](const HeavyTopState& s) {
        std::vector<double> v;
        v.reserve(21);
        push_rotation(v, s.R.matrix());
        push_vec(v, s.x);
        push_vec(v, s.Pi);
        push_vec(v, s.Gamma);
        const auto [pg, gg] = heavytop_casimirs(s.Pi, s.Gamma);
        v.push_back(heavytop_energy(p, s.Pi, s.Gamma));
        v.push_back(pg);
        v.push_back(gg);
        return v;
    };
    switch (c.integrator) {
        case Integrator::LpExp:
            return drive(c, s0, [&](const HeavyTopState& s) { return heavytop_exp_step(p, s, h, ns); }, emit);
        case Integrator::LpCayley:
            return drive(c, s0, [&](const HeavyTopState& s) { return heavytop_cay_step(p, s, h, ns); }, emit);
        case Integrator::QuatRk4:
            return drive(c, s0, [&](const HeavyTopState& s) { return quat_rk4_step(p, s, h); }, emit);
        case Integrator::Rkmk4:
            return drive(c, s0, [&](const HeavyTopState& s) { return rkmk4_step(p, s, h); }, emit);
        default:
            break;
    }
    throw IncompatiblePair(std::string(name(c.scenario)), std::string(name(c.integrator)));
}

Trajectory run_quadrotor(const ScenarioConfig& c, const NewtonSettings& ns, Perturbation& pert) {
    QuadrotorParams p;
    p.inertia = inertia_from(c);
    p.m = c.param("m", 1.0);
    p.g = c.param("g", 9.81);
    p.validate();
    QuadrotorInput u;
    u.F = c.param("F", p.m * p.g);
    u.M = vec_param(c, "M", Vec3::Zero());
    QuadrotorOptions opts;
    opts.retraction = c.integrator == Integrator::LpCayley ? RetractionTag::Cayley : RetractionTag::Exp;
    opts.as_printed = c.param("as_printed", 0.0) != 0.0;
    QuadrotorState s0;
    s0.Pi = vec_param(c, "Pi", Vec3::Zero()) + pert.next3();
    s0.q = vec_param(c, "q", Vec3(0.0, 0.0, 1.0));
    s0.p = vec_param(c, "p", Vec3::Zero()) + pert.next3();
    const double h = c.dt;
    return drive(
        c, s0, [&](const QuadrotorState& s) { return quadrotor_step(p, s, u, h, opts, ns); },
        [&](const QuadrotorState& s) {
            std::vector<double> v;
            v.reserve(20);
            push_rotation(v, s.R.matrix());
            push_vec(v, s.Pi);
            push_vec(v, s.q);
            push_vec(v, s.p);
            v.push_back(quadrotor_energy(p, s.Pi, s.q, s.p));
            v.push_back(rigidbody_casimir(s.Pi));
            return v;
        });
}

}  // namespace

std::size_t Trajectory::column_index(const std::string& col) const {
    const auto it = std::find(columns.begin(), columns.end(), col);
    if (it == columns.end()) throw UnknownColumn(col);
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Trajectory::column(const std::string& col) const {
    std::vector<double> out;
    out.reserve(records.size());
    if (col == "t") {
        for (const auto& r : records) out.push_back(r.t);
        return out;
    }
    const std::size_t i = column_index(col);
    for (const auto& r : records) out.push_back(r.values[i]);
    return out;
}

const std::vector<std::string>& scenario_columns(Scenario s) {
    static const std::vector<std::string> harmonic{"q", "v", "energy"};
    static const std::vector<std::string> kepler{"r1", "r2", "v1", "v2", "energy", "angmom"};
    static const std::vector<std::string> pendulum{"x", "y", "z", "energy", "cyl_defect"};
    static const std::vector<std::string> rigid = with_rotation({"Pi1", "Pi2", "Pi3", "energy", "casimir"});
    static const std::vector<std::string> top = with_rotation({"x1", "x2", "x3", "Pi1", "Pi2", "Pi3", "Gamma1",
                                                               "Gamma2", "Gamma3", "energy", "casimir_pg",
                                                               "gamma_norm2"});
    static const std::vector<std::string> quad = with_rotation(
        {"Pi1", "Pi2", "Pi3", "q1", "q2", "q3", "p1", "p2", "p3", "energy", "casimir"});
    switch (s) {
        case Scenario::Harmonic: return harmonic;
        case Scenario::Kepler: return kepler;
        case Scenario::PendulumEmbedded: return pendulum;
        case Scenario::RigidBody: return rigid;
        case Scenario::HeavyTop: return top;
        case Scenario::QuadrotorHover: return quad;
    }
    return harmonic;
}

Trajectory run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    NewtonSettings ns;
    ns.tol = cfg.param("newton_tol", ns.tol);
    ns.max_iter = static_cast<int>(cfg.param("newton_max_iter", ns.max_iter));
    Perturbation pert(cfg.seed, cfg.param("perturb", 0.0));
    try {
        ns.validate();
        switch (cfg.scenario) {
            case Scenario::Harmonic: return run_harmonic(cfg, ns, pert);
            case Scenario::Kepler: return run_kepler(cfg, ns, pert);
            case Scenario::PendulumEmbedded: return run_pendulum(cfg, ns, pert);
            case Scenario::RigidBody: return run_rigidbody(cfg, ns, pert);
            case Scenario::HeavyTop: return run_heavytop(cfg, ns, pert);
            case Scenario::QuadrotorHover: return run_quadrotor(cfg, ns, pert);
        }
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unhandled scenario");
}

}  // namespace geomech::bench
