#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bvpdn/bounds.hpp"
#include "bvpdn/problem_io.hpp"
#include "bvpdn/report.hpp"
#include "bvpdn/solver.hpp"
#include "bvpdn/verify.hpp"
#include "json.hpp"

namespace bvpdn::cli {
namespace {

struct QuadFlags {
    int n_theta = QuadConfig{}.n_theta;
    int n_r = QuadConfig{}.n_r;
    double tol = QuadConfig{}.adaptive_tol;

    QuadConfig config() const {
        QuadConfig c;
        c.n_theta = n_theta;
        c.n_r = n_r;
        c.adaptive_tol = tol;
        c.validate();
        return c;
    }
};

struct Options {
    BoundParams params;
    std::string problem;
    std::string out;
    std::string format;
    int grid = 8;
    double rmax = 0.9;
    std::string suite = "all";
    std::uint64_t seed = 7;
    double root_tol = 1e-12;
    bool strict = false;
    QuadFlags quad;
};

void add_params(CLI::App* cmd, Options& o) {
    cmd->add_option("--l1", o.params.L1, "bound L1 on sup|gamma0|")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--l2", o.params.L2, "bound L2 on sup|gamma|")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--l3", o.params.L3, "bound L3 on sup|g|")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--c-abs", o.params.c_abs, "|c|")->check(CLI::NonNegativeNumber)->capture_default_str();
}

void add_quad(CLI::App* cmd, Options& o) {
    cmd->add_option("--n-theta", o.quad.n_theta, "angular / boundary nodes (even)")->capture_default_str();
    cmd->add_option("--n-r", o.quad.n_r, "radial Gauss-Legendre nodes")->capture_default_str();
    cmd->add_option("--tol", o.quad.tol, "adaptive refinement tolerance")->check(CLI::PositiveNumber)->capture_default_str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out);
    file << text;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const BoundsReport report = bounds_report(o.params, o.root_tol);
    emit(o.format == "json" ? to_json(report) : to_text(report), o, out);
    return kOk;
}

int cmd_landau(const Options& o, std::ostream& out) {
    if (o.problem.empty()) {
        const LandauResult l = landau_radius(o.params, o.root_tol);
        std::string text;
        if (o.format == "json") {
            text = nlohmann::json{{"L4", l.L4},
                                  {"L5", l.L5},
                                  {"r0", l.r0},
                                  {"R0_lower", l.R0_lower},
                                  {"bracket", {l.bracket.first, l.bracket.second}},
                                  {"iterations", l.iterations}}
                       .dump(2) +
                   "\n";
        } else {
            std::ostringstream os;
            os.precision(17);
            os << "L4 = " << l.L4 << "\nL5 = " << l.L5 << "\nr0 = " << l.r0 << "\nR0_lower = " << l.R0_lower
               << "\nbracket = [" << l.bracket.first << ", " << l.bracket.second << "]\niterations = " << l.iterations
               << "\n";
            text = os.str();
        }
        emit(text, o, out);
        return kOk;
    }
    const ProblemData problem = load_problem(o.problem);
    const QuadConfig config = o.quad.config();
    VerificationReport report;
    report.seed = o.seed;
    report.config = config;
    const BoundParams params = sample_norms(problem).params();
    report.records.push_back(check_landau(problem, params, config));
    emit(o.format == "json" ? to_json(report) : to_text(report), o, out);
    if (!report.passed()) return kVerifyFailed;
    return o.strict && report.accuracy_warning() ? kAccuracy : kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const ProblemData problem = load_problem(o.problem);
    if (o.grid < 1) throw std::invalid_argument("--grid must be positive");
    if (!(o.rmax > 0.0 && o.rmax < 1.0)) throw std::invalid_argument("--rmax must lie in (0, 1)");
    const PolarGridSpec grid{o.grid, o.grid, o.rmax};
    const Solver solver(problem, o.quad.config());
    const std::vector<PointSolution> rows = solver.solve_many(grid.points());
    std::string text;
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const PointSolution& r : rows) {
            arr.push_back({{"re_z", r.z.real()},
                           {"im_z", r.z.imag()},
                           {"re_w", r.w.real()},
                           {"im_w", r.w.imag()},
                           {"abs_w", std::abs(r.w)},
                           {"re_wz", r.wz.real()},
                           {"im_wz", r.wz.imag()},
                           {"re_wzbar", r.wzbar.real()},
                           {"im_wzbar", r.wzbar.imag()}});
        }
        text = nlohmann::json{{"poisson_exact", solver.poisson_exact()}, {"rows", arr}}.dump(2) + "\n";
    } else {
        std::ostringstream os;
        write_solution_csv(os, rows);
        text = os.str();
    }
    emit(text, o, out);
    const bool warned = std::any_of(rows.begin(), rows.end(), [](const PointSolution& r) { return r.accuracy_warning; });
    return o.strict && warned ? kAccuracy : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto suite = parse_suite(o.suite);
    if (!suite) throw std::invalid_argument("unknown suite " + o.suite);
    const VerificationReport report = run_suite(*suite, o.seed, o.quad.config());
    emit(o.format == "json" ? to_json(report) : to_text(report), o, out);
    if (!report.passed()) return kVerifyFailed;
    return o.strict && report.accuracy_warning() ? kAccuracy : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirichlet-Neumann biharmonic solver, bounds and verification", "bvpdn"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> suites{"oracle", "pde", "thm1", "thm2", "claims", "lemmas", "coeff", "landau", "all"};

    auto* bounds = app.add_subcommand("bounds", "growth functions, constants and the Landau radius");
    add_params(bounds, o);
    bounds->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_str("text");
    bounds->add_option("--out", o.out, "output file (default stdout)");
    bounds->add_option("--root-tol", o.root_tol, "bisection tolerance on phi")->check(CLI::PositiveNumber)->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate w and its derivatives on a polar grid");
    eval->add_option("--problem", o.problem, "problem JSON file")->required();
    eval->add_option("--grid", o.grid, "N: N radii by N angles")->capture_default_str();
    eval->add_option("--rmax", o.rmax, "largest radius")->capture_default_str();
    eval->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_str("csv");
    eval->add_option("--out", o.out, "output file (default stdout)");
    eval->add_flag("--strict", o.strict, "exit 3 on quadrature accuracy warnings");
    add_quad(eval, o);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();
    verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
    verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_str("text");
    verify->add_option("--out", o.out, "output file (default stdout)");
    verify->add_flag("--strict", o.strict, "exit 3 on quadrature accuracy warnings");
    add_quad(verify, o);

    auto* landau = app.add_subcommand("landau", "Landau radius, or the Landau check for a normalized problem");
    add_params(landau, o);
    landau->add_option("--problem", o.problem, "problem JSON file; runs the grid check with sampled norms");
    landau->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_str("text");
    landau->add_option("--out", o.out, "output file (default stdout)");
    landau->add_option("--root-tol", o.root_tol, "bisection tolerance on phi")->check(CLI::PositiveNumber)->capture_default_str();
    landau->add_option("--seed", o.seed, "recorded in the report")->capture_default_str();
    landau->add_flag("--strict", o.strict, "exit 3 on quadrature accuracy warnings");
    add_quad(landau, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (o.format.empty()) o.format = eval->parsed() ? "csv" : "text";
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (eval->parsed()) return cmd_eval(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        return cmd_landau(o, out);
    } catch (const ProblemParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace bvpdn::cli
