#include "geomech/bench/compare.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>

#include "geomech/bench/drift.hpp"
#include "geomech/bench/scenario.hpp"
#include "geomech/errors.hpp"
#include "geomech/mechanics.hpp"

namespace geomech::bench {

namespace {

bool has_rotation(Scenario s) {
    return s == Scenario::RigidBody || s == Scenario::HeavyTop || s == Scenario::QuadrotorHover;
}

CompareRow measure(const ScenarioConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory traj = run_scenario(cfg);
    const auto t1 = std::chrono::steady_clock::now();

    CompareRow row;
    row.integrator = cfg.integrator;
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (traj.records.size() >= 2) {
        row.max_energy_dev = summarize_drift(traj, "energy").max_abs_dev;
        for (const auto& col : invariant_columns(cfg.scenario))
            row.invariant_devs.emplace_back(col, summarize_drift(traj, col).max_abs_dev);
    } else {
        for (const auto& col : invariant_columns(cfg.scenario)) row.invariant_devs.emplace_back(col, 0.0);
    }
    if (has_rotation(cfg.scenario)) {
        const std::size_t r11 = traj.column_index("R11");
        row.max_orth_defect = 0.0;
        for (const auto& r : traj.records) {
            Mat3 R;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) R(i, j) = r.values[r11 + static_cast<std::size_t>(3 * i + j)];
            row.max_orth_defect = std::max(row.max_orth_defect, orthogonality_defect(R));
        }
    }
    return row;
}

}  // namespace

std::vector<std::string> invariant_columns(Scenario s) {
    switch (s) {
        case Scenario::Harmonic: return {};
        case Scenario::Kepler: return {"angmom"};
        case Scenario::PendulumEmbedded: return {"cyl_defect"};
        case Scenario::RigidBody: return {"casimir"};
        case Scenario::HeavyTop: return {"casimir_pg", "gamma_norm2"};
        case Scenario::QuadrotorHover: return {"casimir"};
    }
    return {};
}

std::vector<CompareRow> compare(const std::vector<ScenarioConfig>& configs) {
    if (configs.empty()) throw ConfigError("compare needs at least one integrator");
    for (const auto& c : configs)
        if (c.scenario != configs.front().scenario) throw ConfigError("compare needs a single scenario");
    std::vector<std::future<CompareRow>> jobs;
    jobs.reserve(configs.size());
    for (const auto& c : configs) jobs.push_back(std::async(std::launch::async, measure, c));
    std::vector<CompareRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

std::string format_table(Scenario s, const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    char buf[64];
    out << "scenario: " << name(s) << '\n';
    std::snprintf(buf, sizeof buf, "%-16s %14s", "integrator", "max|dE|");
    out << buf;
    for (const auto& col : invariant_columns(s)) {
        std::snprintf(buf, sizeof buf, " %14s", ("max|d " + col + "|").c_str());
        out << buf;
    }
    if (has_rotation(s)) {
        std::snprintf(buf, sizeof buf, " %14s", "max orth");
        out << buf;
    }
    std::snprintf(buf, sizeof buf, " %10s\n", "wall ms");
    out << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-16s %14.6e", std::string(name(r.integrator)).c_str(), r.max_energy_dev);
        out << buf;
        for (const auto& [col, v] : r.invariant_devs) {
            std::snprintf(buf, sizeof buf, " %14.6e", v);
            out << buf;
        }
        if (has_rotation(s)) {
            std::snprintf(buf, sizeof buf, " %14.6e", r.max_orth_defect);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, " %10.1f\n", r.wall_ms);
        out << buf;
    }
    return out.str();
}

}  // namespace geomech::bench
