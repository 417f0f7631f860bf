#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace geomech::bench {

enum class Scenario { Harmonic, Kepler, PendulumEmbedded, RigidBody, HeavyTop, QuadrotorHover };

enum class Integrator {
    ExplicitEuler,
    ImplicitEuler,
    SymplEulerA,
    SymplEulerB,
    StormerVerlet,
    Rk2,
    Rk4,
    ThetaFamily,
    LpExp,
    LpCayley,
    LpExpRight,
    QuatRk4,
    Rkmk4,
};

std::string_view name(Scenario s);
std::string_view name(Integrator i);
Scenario parse_scenario(std::string_view s);      // throws ConfigError
Integrator parse_integrator(std::string_view s);  // throws ConfigError

const std::vector<Scenario>& all_scenarios();
const std::vector<Integrator>& all_integrators();
bool compatible(Scenario s, Integrator i);

/// Model parameter keys accepted by a scenario, in addition to the common
/// keys perturb, newton_tol and newton_max_iter.
const std::vector<std::string>& param_keys(Scenario s);

struct RawEntry {
    std::string value;
    int line = 0;  // 0 for command-line values
};
using RawConfig = std::map<std::string, RawEntry>;

/// Flat `key = value` lines; `#` starts a comment. Throws ParseError.
RawConfig parse_config_text(const std::string& text);
RawConfig parse_config_file(const std::string& path);  // throws IoError, ParseError

struct ScenarioConfig {
    Scenario scenario = Scenario::Harmonic;
    Integrator integrator = Integrator::SymplEulerA;
    double dt = 0.1;
    long steps = 50;
    double theta = 0.5;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;

    double param(const std::string& key, double fallback) const;
    void validate() const;  // throws ConfigError
};

/// Step size and step count of the reference run for each scenario.
ScenarioConfig default_config(Scenario s, Integrator i);

/// Values in `overrides` replace values in `file`.
ScenarioConfig build_config(const RawConfig& file, const RawConfig& overrides = {});

}  // namespace geomech::bench
