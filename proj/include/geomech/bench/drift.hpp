#pragma once

#include <string>
#include <vector>

#include "geomech/bench/scenario.hpp"

namespace geomech::bench {

struct DriftSummary {
    double initial = 0.0;
    double final = 0.0;
    double max_abs_dev = 0.0;   // max |v_k - v_first|
    double linear_slope = 0.0;  // least-squares slope per unit time
};

/// Needs at least two records; throws UnknownColumn.
DriftSummary summarize_drift(const Trajectory& traj, const std::string& column);

DriftSummary summarize_drift(const std::vector<double>& t, const std::vector<double>& v);

}  // namespace geomech::bench
