#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geomech/bench/config.hpp"

namespace geomech::bench {

struct CompareRow {
    Integrator integrator = Integrator::LpExp;
    double max_energy_dev = 0.0;
    std::vector<std::pair<std::string, double>> invariant_devs;
    double max_orth_defect = -1.0;  // negative when the state has no rotation
    double wall_ms = 0.0;
};

/// Invariant columns reported besides energy.
std::vector<std::string> invariant_columns(Scenario s);

/// Runs the configurations concurrently; all must share one scenario.
std::vector<CompareRow> compare(const std::vector<ScenarioConfig>& configs);

std::string format_table(Scenario s, const std::vector<CompareRow>& rows);

}  // namespace geomech::bench
