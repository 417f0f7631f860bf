#pragma once

#include <string>
#include <vector>

#include "geomech/bench/config.hpp"

namespace geomech::bench {

struct TrajectoryRecord {
    long step = 0;
    double t = 0.0;
    std::vector<double> values;  // one per column of the trajectory
};

struct Trajectory {
    Scenario scenario = Scenario::Harmonic;
    std::vector<std::string> columns;  // without step and t
    std::vector<TrajectoryRecord> records;

    std::size_t column_index(const std::string& col) const;  // throws UnknownColumn
    std::vector<double> column(const std::string& col) const;
};

/// State and invariant columns per scenario, without step and t.
const std::vector<std::string>& scenario_columns(Scenario s);

/// Advances `steps` steps; record k is the state after step k.
/// Throws IntegratorFailure when a step cannot be completed.
Trajectory run_scenario(const ScenarioConfig& cfg);

}  // namespace geomech::bench
