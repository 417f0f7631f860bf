#include "geomech/bench/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "geomech/errors.hpp"

namespace geomech::bench {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 6> kScenarioNames{{
    {Scenario::Harmonic, "harmonic"},
    {Scenario::Kepler, "kepler"},
    {Scenario::PendulumEmbedded, "pendulum_embedded"},
    {Scenario::RigidBody, "rigidbody"},
    {Scenario::HeavyTop, "heavytop"},
    {Scenario::QuadrotorHover, "quadrotor_hover"},
}};

constexpr std::array<std::pair<Integrator, std::string_view>, 13> kIntegratorNames{{
    {Integrator::ExplicitEuler, "explicit_euler"},
    {Integrator::ImplicitEuler, "implicit_euler"},
    {Integrator::SymplEulerA, "sympl_euler_a"},
    {Integrator::SymplEulerB, "sympl_euler_b"},
    {Integrator::StormerVerlet, "stormer_verlet"},
    {Integrator::Rk2, "rk2"},
    {Integrator::Rk4, "rk4"},
    {Integrator::ThetaFamily, "theta_family"},
    {Integrator::LpExp, "lp_exp"},
    {Integrator::LpCayley, "lp_cayley"},
    {Integrator::LpExpRight, "lp_exp_right"},
    {Integrator::QuatRk4, "quat_rk4"},
    {Integrator::Rkmk4, "rkmk4"},
}};

const std::vector<std::string> kCommonKeys{"perturb", "newton_tol", "newton_max_iter"};

std::string_view trim(std::string_view s) {
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

bool valid_key(std::string_view k) {
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-';
    });
}

double to_double(const std::string& key, const RawEntry& e) {
    const std::string_view v = trim(e.value);
    if (v == "true") return 1.0;
    if (v == "false") return 0.0;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
        throw ParseError(e.line, "value of '" + key + "' is not a finite number: '" + e.value + "'");
    return out;
}

long to_long(const std::string& key, const RawEntry& e) {
    const std::string_view v = trim(e.value);
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ParseError(e.line, "value of '" + key + "' is not an integer: '" + e.value + "'");
    return out;
}

}  // namespace

std::string_view name(Scenario s) {
    for (const auto& [k, v] : kScenarioNames)
        if (k == s) return v;
    return "?";
}

std::string_view name(Integrator i) {
    for (const auto& [k, v] : kIntegratorNames)
        if (k == i) return v;
    return "?";
}

Scenario parse_scenario(std::string_view s) {
    for (const auto& [k, v] : kScenarioNames)
        if (v == s) return k;
    throw ConfigError("unknown scenario '" + std::string(s) + "'");
}

Integrator parse_integrator(std::string_view s) {
    for (const auto& [k, v] : kIntegratorNames)
        if (v == s) return k;
    throw ConfigError("unknown integrator '" + std::string(s) + "'");
}

const std::vector<Scenario>& all_scenarios() {
    static const std::vector<Scenario> v = [] {
        std::vector<Scenario> out;
        for (const auto& [k, n] : kScenarioNames) out.push_back(k);
        return out;
    }();
    return v;
}

const std::vector<Integrator>& all_integrators() {
    static const std::vector<Integrator> v = [] {
        std::vector<Integrator> out;
        for (const auto& [k, n] : kIntegratorNames) out.push_back(k);
        return out;
    }();
    return v;
}

bool compatible(Scenario s, Integrator i) {
    using I = Integrator;
    switch (s) {
        case Scenario::Harmonic:
        case Scenario::Kepler:
            return i == I::ExplicitEuler || i == I::ImplicitEuler || i == I::SymplEulerA || i == I::SymplEulerB ||
                   i == I::StormerVerlet || i == I::Rk2 || i == I::Rk4 || i == I::ThetaFamily;
        case Scenario::PendulumEmbedded:
            return i == I::ExplicitEuler || i == I::ImplicitEuler || i == I::Rk2 || i == I::Rk4 ||
                   i == I::ThetaFamily;
        case Scenario::RigidBody:
            return i == I::LpExp || i == I::LpCayley || i == I::LpExpRight || i == I::QuatRk4 || i == I::Rkmk4;
        case Scenario::HeavyTop:
            return i == I::LpExp || i == I::LpCayley || i == I::QuatRk4 || i == I::Rkmk4;
        case Scenario::QuadrotorHover:
            return i == I::LpExp || i == I::LpCayley;
    }
    return false;
}

const std::vector<std::string>& param_keys(Scenario s) {
    static const std::map<Scenario, std::vector<std::string>> keys{
        {Scenario::Harmonic, {"k", "m", "q0", "v0"}},
        {Scenario::Kepler, {"mu", "r1", "r2", "v1", "v2"}},
        {Scenario::PendulumEmbedded, {"ml2", "mgl", "theta0", "p0", "project"}},
        {Scenario::RigidBody, {"I1", "I2", "I3", "Pi1", "Pi2", "Pi3"}},
        {Scenario::HeavyTop,
         {"I1", "I2", "I3", "Pi1", "Pi2", "Pi3", "Gamma1", "Gamma2", "Gamma3", "m", "g", "chi1", "chi2", "chi3"}},
        {Scenario::QuadrotorHover,
         {"I1", "I2", "I3", "Pi1", "Pi2", "Pi3", "m", "g", "F", "M1", "M2", "M3", "q1", "q2", "q3", "p1", "p2",
          "p3", "as_printed"}},
    };
    return keys.at(s);
}

RawConfig parse_config_text(const std::string& text) {
    RawConfig out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v(line);
        if (lineno == 1 && v.substr(0, 3) == "\xEF\xBB\xBF") v.remove_prefix(3);
        if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = trim(v);
        if (v.empty()) continue;
        const auto eq = v.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
        const std::string_view key = trim(v.substr(0, eq));
        const std::string_view value = trim(v.substr(eq + 1));
        if (!valid_key(key)) throw ParseError(lineno, "invalid key '" + std::string(key) + "'");
        if (value.empty()) throw ParseError(lineno, "empty value for '" + std::string(key) + "'");
        if (out.count(std::string(key))) throw ParseError(lineno, "duplicate key '" + std::string(key) + "'");
        out[std::string(key)] = RawEntry{std::string(value), lineno};
    }
    return out;
}

RawConfig parse_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

double ScenarioConfig::param(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void ScenarioConfig::validate() const {
    if (!compatible(scenario, integrator))
        throw IncompatiblePair(std::string(name(scenario)), std::string(name(integrator)));
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (steps < 1) throw ConfigError("steps must be at least 1");
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0,1]");
    const auto& keys = param_keys(scenario);
    for (const auto& [k, v] : params) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end() &&
            std::find(kCommonKeys.begin(), kCommonKeys.end(), k) == kCommonKeys.end())
            throw UnknownKey(k);
    }
}

ScenarioConfig default_config(Scenario s, Integrator i) {
    ScenarioConfig c;
    c.scenario = s;
    c.integrator = i;
    switch (s) {
        case Scenario::Harmonic:
            c.dt = 0.1;
            c.steps = 50;
            break;
        case Scenario::Kepler:
            c.dt = 0.01;
            c.steps = 3000;
            break;
        case Scenario::PendulumEmbedded:
            c.dt = 0.1;
            c.steps = 1000;
            break;
        case Scenario::RigidBody:
        case Scenario::HeavyTop:
        case Scenario::QuadrotorHover:
            c.dt = 0.01;
            c.steps = 180000;
            break;
    }
    return c;
}

ScenarioConfig build_config(const RawConfig& file, const RawConfig& overrides) {
    RawConfig merged = file;
    for (const auto& [k, v] : overrides) merged[k] = v;

    const auto req = [&](const char* key) -> const RawEntry& {
        const auto it = merged.find(key);
        if (it == merged.end()) throw MissingKey(key);
        return it->second;
    };
    const RawEntry& se = req("scenario");
    const RawEntry& ie = req("integrator");
    Scenario s;
    Integrator i;
    try {
        s = parse_scenario(trim(se.value));
    } catch (const ConfigError& e) {
        throw ParseError(se.line, e.what());
    }
    try {
        i = parse_integrator(trim(ie.value));
    } catch (const ConfigError& e) {
        throw ParseError(ie.line, e.what());
    }
    ScenarioConfig c = default_config(s, i);
    for (const auto& [k, e] : merged) {
        if (k == "scenario" || k == "integrator") continue;
        if (k == "dt")
            c.dt = to_double(k, e);
        else if (k == "steps")
            c.steps = to_long(k, e);
        else if (k == "theta")
            c.theta = to_double(k, e);
        else if (k == "seed") {
            const long v = to_long(k, e);
            if (v < 0) throw ParseError(e.line, "seed must be non-negative");
            c.seed = static_cast<std::uint64_t>(v);
        } else
            c.params[k] = to_double(k, e);
    }
    c.validate();
    return c;
}

}  // namespace geomech::bench
