#include "geomech/bench/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "geomech/errors.hpp"

namespace geomech::bench {

namespace {

void put_double(std::ostream& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
}

double get_double(std::string_view s, long line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError("bad number on csv line " + std::to_string(line));
    return v;
}

}  // namespace

std::string csv_header(Scenario s) {
    std::string h = "step,t";
    for (const auto& c : scenario_columns(s)) h += "," + c;
    return h;
}

void write_csv(const Trajectory& traj, std::ostream& out) {
    if (traj.records.empty()) throw IoError("no records to write");
    out << "step,t";
    for (const auto& c : traj.columns) out << ',' << c;
    out << '\n';
    for (const auto& r : traj.records) {
        out << r.step << ',';
        put_double(out, r.t);
        for (double v : r.values) {
            out << ',';
            put_double(out, v);
        }
        out << '\n';
    }
}

void write_csv(const Trajectory& traj, const std::string& path) {
    if (traj.records.empty()) throw IoError("no records to write");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_csv(traj, f);
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

Trajectory read_csv(const std::string& path, Scenario scenario) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(f, line) || line != csv_header(scenario)) throw IoError("unexpected csv header in '" + path + "'");
    Trajectory traj;
    traj.scenario = scenario;
    traj.columns = scenario_columns(scenario);
    long lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != traj.columns.size() + 2)
            throw IoError("wrong field count on csv line " + std::to_string(lineno));
        TrajectoryRecord r;
        r.step = static_cast<long>(get_double(fields[0], lineno));
        r.t = get_double(fields[1], lineno);
        for (std::size_t i = 2; i < fields.size(); ++i) r.values.push_back(get_double(fields[i], lineno));
        traj.records.push_back(std::move(r));
    }
    return traj;
}

}  // namespace geomech::bench
