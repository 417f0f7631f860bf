// geomech-bench: run integrators on the model scenarios and write CSV
// trajectories or comparison tables.
//
// exit codes: 0 success, 1 usage or configuration error, 2 integrator failure
// (also returned by `check` when a self-check fails)

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geomech/bench/compare.hpp"
#include "geomech/bench/config.hpp"
#include "geomech/bench/csv.hpp"
#include "geomech/bench/scenario.hpp"
#include "geomech/bench/selfcheck.hpp"
#include "geomech/errors.hpp"

namespace gb = geomech::bench;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct CommonFlags {
    std::string scenario;
    std::optional<double> dt;
    std::optional<long> steps;
    std::optional<double> theta;
    std::optional<long> seed;
    std::vector<std::string> params;
    std::string config;
    bool as_printed = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--scenario", f.scenario, "harmonic, kepler, pendulum_embedded, rigidbody, heavytop, quadrotor_hover");
    cmd->add_option("--dt", f.dt, "step size");
    cmd->add_option("--steps", f.steps, "number of steps");
    cmd->add_option("--theta", f.theta, "theta for theta_family");
    cmd->add_option("--seed", f.seed, "seed for the perturb parameter");
    cmd->add_option("--param", f.params, "model parameter key=value (repeatable)");
    cmd->add_option("--config", f.config, "flat key = value file");
    cmd->add_flag("--as-printed", f.as_printed, "quadrotor: use the alternative momentum update");
}

gb::RawConfig overrides_from(const CommonFlags& f) {
    gb::RawConfig o;
    auto put = [&](const std::string& k, const std::string& v) { o[k] = gb::RawEntry{v, 0}; };
    if (!f.scenario.empty()) put("scenario", f.scenario);
    if (f.dt) {
        std::ostringstream s;
        s.precision(17);
        s << *f.dt;
        put("dt", s.str());
    }
    if (f.steps) put("steps", std::to_string(*f.steps));
    if (f.theta) {
        std::ostringstream s;
        s.precision(17);
        s << *f.theta;
        put("theta", s.str());
    }
    if (f.seed) put("seed", std::to_string(*f.seed));
    for (const auto& kv : f.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw geomech::ConfigError("--param expects key=value, got '" + kv + "'");
        put(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (f.as_printed) put("as_printed", "1");
    return o;
}

gb::RawConfig file_from(const CommonFlags& f) {
    return f.config.empty() ? gb::RawConfig{} : gb::parse_config_file(f.config);
}

int do_run(const CommonFlags& f, const std::string& integrator, const std::string& out) {
    gb::RawConfig o = overrides_from(f);
    if (!integrator.empty()) o["integrator"] = gb::RawEntry{integrator, 0};
    const gb::ScenarioConfig cfg = gb::build_config(file_from(f), o);
    const gb::Trajectory traj = gb::run_scenario(cfg);
    gb::write_csv(traj, out);
    std::cout << "wrote " << traj.records.size() << " records to " << out << '\n';
    return kOk;
}

int do_compare(const CommonFlags& f, const std::vector<std::string>& integrators, const std::string& out) {
    const gb::RawConfig file = file_from(f);
    std::vector<gb::ScenarioConfig> cfgs;
    for (const auto& name : integrators) {
        gb::RawConfig o = overrides_from(f);
        o["integrator"] = gb::RawEntry{name, 0};
        cfgs.push_back(gb::build_config(file, o));
    }
    if (cfgs.empty()) throw geomech::ConfigError("--integrators is empty");
    const std::string table = gb::format_table(cfgs.front().scenario, gb::compare(cfgs));
    std::cout << table;
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw geomech::IoError("cannot open '" + out + "' for writing");
        f << table;
        if (!f) throw geomech::IoError("write to '" + out + "' failed");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric integrator benchmark"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string run_integrator;
    std::string run_out;
    CLI::App* run = app.add_subcommand("run", "integrate one scenario and write a CSV trajectory");
    add_common(run, run_flags);
    run->add_option("--integrator", run_integrator, "integrator name");
    run->add_option("--out", run_out, "output CSV path")->required();

    CommonFlags cmp_flags;
    std::vector<std::string> cmp_integrators;
    std::string cmp_out;
    CLI::App* cmp = app.add_subcommand("compare", "run several integrators and print invariant drift");
    add_common(cmp, cmp_flags);
    cmp->add_option("--integrators", cmp_integrators, "comma separated integrator names")
        ->required()
        ->delimiter(',');
    cmp->add_option("--out", cmp_out, "also write the table here");

    CLI::App* check = app.add_subcommand("check", "run the built-in invariant self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*run) return do_run(run_flags, run_integrator, run_out);
        if (*cmp) return do_compare(cmp_flags, cmp_integrators, cmp_out);
        if (*check) return gb::run_selfcheck(std::cout) ? kOk : kFailure;
    } catch (const geomech::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const geomech::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const geomech::IntegratorFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
