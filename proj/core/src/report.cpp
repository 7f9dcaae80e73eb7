#include "bvpdn/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace bvpdn {
namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(Complex z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
    json records = json::array();
    for (const CheckRecord& r : report.records) {
        records.push_back({
            {"name", r.name},
            {"points_tested", r.points_tested},
            {"worst_slack", number(r.worst_slack)},
            {"worst_point", complex_json(r.worst_point)},
            {"measured", number(r.measured)},
            {"bound", number(r.bound)},
            {"allowance", number(r.allowance)},
            {"passed", r.passed},
            {"metadata", r.metadata},
        });
    }
    const QuadConfig& c = report.config;
    json doc{
        {"seed", report.seed},
        {"config",
         {{"n_theta", c.n_theta},
          {"n_r", c.n_r},
          {"adaptive_tol", number(c.adaptive_tol)},
          {"max_depth", c.max_depth},
          {"exclusion_radius", number(c.exclusion_radius)}}},
        {"passed", report.passed()},
        {"accuracy_warning", report.accuracy_warning()},
        {"records", records},
    };
    return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    std::size_t failed = 0;
    char line[256];
    std::snprintf(line, sizeof line, "%-48s %6s %14s %14s %14s  %s\n", "check", "points", "measured", "bound",
                  "worst_slack", "result");
    os << line;
    for (const CheckRecord& r : report.records) {
        std::snprintf(line, sizeof line, "%-48s %6zu %14.6e %14.6e %14.6e  %s\n", r.name.c_str(), r.points_tested,
                      r.measured, r.bound, r.worst_slack, r.passed ? "PASS" : "FAIL");
        os << line;
        if (!r.passed) ++failed;
    }
    os << report.records.size() << " checks, " << failed << " failed, seed " << report.seed << "\n";
    return os.str();
}

std::string to_json(const BoundsReport& report) {
    json rows = json::array();
    for (const auto& row : report.table) {
        rows.push_back({{"t", row.t}, {"N1", row.n1}, {"N2", row.n2}, {"N3", row.n3}, {"N4", row.n4}});
    }
    const LandauResult& l = report.landau;
    json doc{
        {"L1", report.params.L1},
        {"L2", report.params.L2},
        {"L3", report.params.L3},
        {"c_abs", report.params.c_abs},
        {"L4", l.L4},
        {"L5", l.L5},
        {"M1", report.m1},
        {"M2", report.m2},
        {"r0", l.r0},
        {"R0_lower", l.R0_lower},
        {"bracket", {l.bracket.first, l.bracket.second}},
        {"iterations", l.iterations},
        {"table", rows},
    };
    return doc.dump(2) + "\n";
}

std::string to_text(const BoundsReport& report) {
    std::ostringstream os;
    const LandauResult& l = report.landau;
    os << "L1 = " << g17(report.params.L1) << "  L2 = " << g17(report.params.L2) << "  L3 = " << g17(report.params.L3)
       << "  |c| = " << g17(report.params.c_abs) << "\n\n";
    char line[200];
    std::snprintf(line, sizeof line, "%5s %20s %20s %20s %20s\n", "t", "N1", "N2", "N3", "N4");
    os << line;
    for (const auto& row : report.table) {
        std::snprintf(line, sizeof line, "%5.2f %20.15f %20.15f %20.15f %20.15f\n", row.t, row.n1, row.n2, row.n3,
                      row.n4);
        os << line;
    }
    os << "\nM1       = " << g17(report.m1) << "\nM2       = " << g17(report.m2) << "\nL4       = " << g17(l.L4)
       << "\nL5       = " << g17(l.L5) << "\nr0       = " << g17(l.r0) << "\nR0_lower = " << g17(l.R0_lower)
       << "\nbracket  = [" << g17(l.bracket.first) << ", " << g17(l.bracket.second) << "] after " << l.iterations
       << " bisection steps\n";
    return os.str();
}

}  // namespace bvpdn
