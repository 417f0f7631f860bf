#include "geomech/bench/drift.hpp"

#include <algorithm>
#include <cmath>

#include "geomech/errors.hpp"

namespace geomech::bench {

DriftSummary summarize_drift(const std::vector<double>& t, const std::vector<double>& v) {
    if (t.size() != v.size()) throw DimMismatch(t.size(), v.size());
    if (v.size() < 2) throw InvalidParameter("drift summary needs at least two records");
    DriftSummary d;
    d.initial = v.front();
    d.final = v.back();
    const double n = static_cast<double>(v.size());
    double tm = 0.0;
    double vm = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        d.max_abs_dev = std::max(d.max_abs_dev, std::abs(v[i] - d.initial));
        tm += t[i];
        vm += v[i];
    }
    tm /= n;
    vm /= n;
    double stt = 0.0;
    double stv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        stt += (t[i] - tm) * (t[i] - tm);
        stv += (t[i] - tm) * (v[i] - vm);
    }
    if (!(stt > 0.0)) throw InvalidParameter("drift summary needs distinct times");
    d.linear_slope = stv / stt;
    return d;
}

DriftSummary summarize_drift(const Trajectory& traj, const std::string& column) {
    return summarize_drift(traj.column("t"), traj.column(column));
}

}  // namespace geomech::bench
