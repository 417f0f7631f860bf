#pragma once

#include <ostream>
#include <string>

#include "geomech/bench/scenario.hpp"

namespace geomech::bench {

/// Header `step,t,<columns>`; numbers with 17 significant digits.
void write_csv(const Trajectory& traj, std::ostream& out);

/// Throws IoError. Refuses an empty trajectory without creating the file.
void write_csv(const Trajectory& traj, const std::string& path);

/// Reads a file produced by write_csv back into a trajectory.
Trajectory read_csv(const std::string& path, Scenario scenario);

std::string csv_header(Scenario s);

}  // namespace geomech::bench
