// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bvpdn/bounds.hpp"
#include "bvpdn/kernel.hpp"
#include "bvpdn/solver.hpp"
#include "bvpdn/verify.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace {

using bvpdn::Complex;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void oracle_criteria() {
    const bvpdn::PolarGridSpec grid;
    const std::vector<Complex> points = grid.points();
    double worst_value = 0.0;
    double worst_dz = 0.0;
    double worst_fd = 0.0;
    double slowest = 0.0;
    bool ok1 = true;
    bool ok2 = true;
    for (const bvpdn::NamedPolynomial& np : bvpdn::oracle_fixtures(7)) {
        const bvpdn::ProblemData problem = bvpdn::manufacture(np.w);
        const auto start = std::chrono::steady_clock::now();
        const bvpdn::Solver solver(problem);
        const std::vector<bvpdn::PointSolution> sols = solver.solve_many(points);
        slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        for (const bvpdn::PointSolution& s : sols) {
            worst_value = std::max(worst_value, std::abs(s.w - np.w(s.z)));
            worst_dz = std::max(worst_dz, std::max(std::abs(s.wz - np.w.dz(s.z)), std::abs(s.wzbar - np.w.dzbar(s.z))));
        }
        const bvpdn::CheckRecord fd = bvpdn::check_gradient_fd(problem, points, {});
        worst_fd = std::max(worst_fd, fd.measured);
        ok2 = ok2 && fd.passed;
    }
    ok1 = worst_value <= 1e-4 && slowest <= 60.0;
    ok2 = ok2 && worst_dz <= 1e-3 && worst_fd <= 1e-5;
    report(1, "manufactured-solution oracle", ok1,
           fmt("sup |w - exact| = %.3e over 9 fixtures x 400 points (limit 1e-4), slowest fixture %.1f s", worst_value,
               slowest));
    report(2, "derivative oracle", ok2,
           fmt("sup derivative error = %.3e (limit 1e-3), sup gap to finite differences = %.3e (limit 1e-5)",
               worst_dz, worst_fd));
}

void constant_source() {
    bvpdn::ProblemData one;
    one.g = bvpdn::Source(bvpdn::BihPolynomial({{0, 0, 1.0}}));
    const Complex v = bvpdn::eval_g2(one, 0.0);
    const double err = std::abs(v + 0.75);
    report(3, "constant-source identity", err <= 1e-8, fmt("G2[1](0) = %.16f, |G2 + 3/4| = %.3e", v.real(), err));
}

void kernel_identities() {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto point = [&](double radius) { return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng)); };
    double worst_imag = 0.0;
    double worst_boundary = 0.0;
    double worst_fd = 0.0;
    const double h = 1e-6;
    int pairs = 0;
    while (pairs < 1000) {
        const Complex z = point(0.95);
        const Complex zeta = point(1.0);
        if (std::abs(zeta - z) < 0.05) continue;
        ++pairs;
        worst_imag = std::max(worst_imag, std::abs(bvpdn::detail::h2_complex(z, zeta, {}).imag()));
        const Complex edge = std::polar(1.0 - 1e-8, std::arg(z));
        worst_boundary = std::max(worst_boundary, std::abs(bvpdn::h2(edge, zeta)));
        const double dx = (bvpdn::h2(z + h, zeta) - bvpdn::h2(z - h, zeta)) / (2.0 * h);
        const double dy = (bvpdn::h2(z + Complex(0, h), zeta) - bvpdn::h2(z - Complex(0, h), zeta)) / (2.0 * h);
        worst_fd = std::max(worst_fd, std::abs(bvpdn::h2_dz(z, zeta) - 0.5 * Complex(dx, -dy)));
    }
    const bool ok = worst_imag <= 1e-12 && worst_boundary <= 1e-6 && worst_fd <= 1e-6;
    report(4, "kernel identities", ok,
           fmt("%d pairs: max |Im H2| = %.2e, max |H2| at |z| = 1-1e-8 is %.2e, max |h2_dz - FD| = %.2e", pairs,
               worst_imag, worst_boundary, worst_fd));
}

void constants() {
    // Independent high-precision values (mpmath, 40 digits).
    struct C {
        const char* name;
        double got;
        double ref;
    };
    const C list[] = {
        {"n1(0)", bvpdn::n1(0.0), 8.972803961856776}, {"n2(0)", bvpdn::n2(0.0), 14.52547504328192},
        {"n3(0)", bvpdn::n3(0.0), 6.615767075512240}, {"n4(0)", bvpdn::n4(0.0), 6.421500526380568},
        {"m1", bvpdn::m1(), 4.466951714896955},       {"m2", bvpdn::m2(), 5.970508107983233},
    };
    double worst = 0.0;
    std::string detail;
    for (const C& c : list) {
        worst = std::max(worst, std::abs(c.got - c.ref));
        detail += fmt("%s=%.10f ", c.name, c.got);
    }
    report(5, "closed-form constants", worst <= 1e-6, detail + fmt("max deviation %.2e", worst));
}

void landau_radius() {
    const bvpdn::BoundParams p{1.0, 1.0, 1.0, 0.0};
    const bvpdn::LandauResult r = bvpdn::landau_radius(p);
    const double phi0 = bvpdn::phi(r.r0, p);
    bool ok = std::abs(r.L4 - 14.31050714662797) <= 1e-6 && std::abs(r.L5 - 10.43745982288019) <= 1e-6 &&
              r.r0 > 0.0015 && r.r0 < 0.002 && std::abs(phi0) <= 1e-12;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    int monotone_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const bvpdn::BoundParams q{u(rng), u(rng), u(rng), u(rng)};
        double prev = bvpdn::phi(0.0, q);
        for (int i = 1; i < 200; ++i) {
            const double cur = bvpdn::phi(i / 200.0, q);
            if (!(cur < prev)) ++monotone_failures;
            prev = cur;
        }
    }
    ok = ok && monotone_failures == 0;
    report(6, "Landau radius", ok,
           fmt("L4 = %.10f, L5 = %.10f, r0 = %.12f, |phi(r0)| = %.2e, phi monotonicity failures on 1000 sets: %d",
               r.L4, r.L5, r.r0, std::abs(phi0), monotone_failures));
}

void report_criteria(const json& doc) {
    const json& records = doc.at("records");
    int inequality_records = 0;
    int inequality_failed = 0;
    std::size_t inequality_points = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::set<std::string> normalized;
    for (const json& r : records) {
        const std::string name = r.at("name");
        const bool family = starts_with(name, "thm1[") || starts_with(name, "thm2[") ||
                            starts_with(name, "g_operator_bounds[") || starts_with(name, "lemma_derivative_bounds[") ||
                            starts_with(name, "harmonic_coefficients[") || starts_with(name, "jacobian_floor[");
        if (!family) continue;
        ++inequality_records;
        inequality_points += r.at("points_tested").get<std::size_t>();
        if (!r.at("passed").get<bool>()) ++inequality_failed;
        if (r.at("worst_slack").is_number()) worst_slack = std::min(worst_slack, r.at("worst_slack").get<double>());
        const auto open = name.find("[normalized-");
        if (open != std::string::npos) normalized.insert(name.substr(open));
    }
    report(7, "inequality suites", inequality_failed == 0 && normalized.size() == 20,
           fmt("%d records, %zu point evaluations, %zu random problems, %d violations beyond 1e-6, worst slack %.3e",
               inequality_records, inequality_points, normalized.size(), inequality_failed, worst_slack));

    double a1b1 = std::nan("");
    for (const json& r : records) {
        if (r.at("name") == "harmonic_coefficients[extremal-f1]") a1b1 = std::stod(r.at("metadata").at("a1_plus_b1").get<std::string>());
    }
    const double gap = std::abs(a1b1 - 4.0 / kPi);
    report(8, "sharpness fixture", gap <= 1e-6, fmt("|a1| + |b1| = %.12f, 4M/pi = %.12f, gap %.2e", a1b1, 4.0 / kPi, gap));

    int fixtures = 0;
    int collisions = 0;
    bool recorded = true;
    bool all_passed = true;
    double identity_gap = std::nan("");
    std::string detail;
    for (const json& r : records) {
        const std::string name = r.at("name");
        if (!starts_with(name, "landau[")) continue;
        ++fixtures;
        const json& m = r.at("metadata");
        collisions += std::stoi(m.at("collisions").get<std::string>());
        all_passed = all_passed && r.at("passed").get<bool>();
        recorded = recorded && m.contains("min_boundary_modulus") && m.contains("R0_lower");
        const double r0 = std::stod(m.at("r0").get<std::string>());
        const double mod = std::stod(m.at("min_boundary_modulus").get<std::string>());
        if (name == "landau[identity]") identity_gap = std::abs(mod - r0);
        detail += fmt("%s min|w|=%.4e R0=%.4e; ", name.c_str(), mod, std::stod(m.at("R0_lower").get<std::string>()));
    }
    const bool ok9 = fixtures > 0 && collisions == 0 && recorded && all_passed && identity_gap <= 1e-6;
    report(9, "Landau check on fixtures",
           ok9, fmt("%d fixtures, %d collisions, identity |min modulus - r0| = %.2e; ", fixtures, collisions,
                    identity_gap) +
                    detail);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = fs::temp_directory_path() / "bvpdn_acceptance";
    fs::create_directories(dir);
    const fs::path first = dir / "verify_all_1.json";
    const fs::path second = dir / "verify_all_2.json";
    std::ostringstream sink;
    const int code1 = bvpdn::cli::run({"verify", "--suite", "all", "--seed", "7", "--format", "json", "--out",
                                       first.string()},
                                      sink, sink);
    const int code2 = bvpdn::cli::run({"verify", "--suite", "all", "--seed", "7", "--format", "json", "--out",
                                       second.string()},
                                      sink, sink);
    const std::string a = slurp(first);
    const std::string b = slurp(second);
    json doc;
    try {
        doc = json::parse(a);
    } catch (const std::exception& e) {
        std::printf("verify report unreadable: %s\n%s", e.what(), sink.str().c_str());
        return 1;
    }

    oracle_criteria();
    constant_source();
    kernel_identities();
    constants();
    landau_radius();
    report_criteria(doc);
    report(10, "determinism", code1 == code2 && !a.empty() && a == b,
           fmt("two runs of verify --suite all --seed 7: %zu and %zu bytes, %s, exit codes %d/%d", a.size(), b.size(),
               a == b ? "identical" : "different", code1, code2));

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 10 criteria failed (%.0f s); full report: %s (overall %s)\n", failures, seconds,
                first.string().c_str(), doc.at("passed").get<bool>() ? "passed" : "failed");
    return failures == 0 ? 0 : 1;
}
