#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvpdn/bounds.hpp"
#include "bvpdn/problems.hpp"
#include "bvpdn/quadrature.hpp"
#include "bvpdn/solver.hpp"

namespace bvpdn {

/// Slack granted to inequality checks on top of the stated bound.
inline constexpr double kInequalityAllowance = 1e-6;

/// Outcome of one check. worst_slack is bound - measured for upper bounds and
/// measured - bound for lower bounds, so negative values are violations;
/// passed == (worst_slack >= -allowance). measured and bound are taken at
/// worst_point.
struct CheckRecord {
    std::string name;
    std::size_t points_tested = 0;
    double worst_slack = 0.0;
    Complex worst_point{};
    double measured = 0.0;
    double bound = 0.0;
    double allowance = 0.0;
    bool passed = true;
    std::map<std::string, std::string> metadata;
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    std::uint64_t seed = 0;
    QuadConfig config;

    bool passed() const;
    /// True when any quadrature ran out of refinement depth.
    bool accuracy_warning() const;
};

/// radii r_max (i+1)/n_r for i < n_r, angles 2 pi j / n_theta.
struct PolarGridSpec {
    int n_r = 20;
    int n_theta = 20;
    double r_max = 0.9;

    std::vector<Complex> points() const;
};

/// Sampled sup norms: gamma0 and gamma on 4096 boundary angles, g on a
/// 256 x 256 polar grid.
struct ProblemNorms {
    double gamma0 = 0.0;
    double gamma = 0.0;
    double g = 0.0;
    double c_abs = 0.0;

    BoundParams params() const { return {gamma0, gamma, g, c_abs}; }
};

ProblemNorms sample_norms(const ProblemData& problem);

// ---------------------------------------------------------------- checks

/// sup |w - exact| over the grid; passes iff <= tol.
CheckRecord check_oracle(const BihPolynomial& w, const PolarGridSpec& grid, const QuadConfig& config,
                         double tol = 1e-4);

/// max(|w_z - exact|, |w_zbar - exact|) over the grid; passes iff <= tol.
CheckRecord check_derivative_oracle(const BihPolynomial& w, const PolarGridSpec& grid, const QuadConfig& config,
                                    double tol = 1e-3);

/// Solver derivatives against 4th-order central differences of the value
/// path with step h in x and y; passes iff the largest gap is <= tol.
CheckRecord check_gradient_fd(const ProblemData& problem, std::span<const Complex> points, const QuadConfig& config,
                              double h = 1e-4, double tol = 1e-5);

/// 13-point biharmonic stencil applied to the polynomial against 16 g at
/// interior points |z| <= 0.8. The bound is 100 h^2 max(1, sup|16 g|) plus the
/// rounding floor 64 eps sup|w| / h^4. Throws std::domain_error when a stencil
/// point leaves the disk, std::invalid_argument when h is outside (0, 0.01].
CheckRecord check_pde_residual(const BihPolynomial& w, double h = 1e-2);

/// Compatibility residual of the problem data; passes iff <= tol.
CheckRecord check_compatibility(const ProblemData& problem, const QuadConfig& config, double tol = 1e-10);

/// Schwarz-type estimate: |w(z) - (1-|z|^2)/(1+|z|^2) P(0)| <= schwarz_bound.
CheckRecord check_thm1(const ProblemData& problem, std::span<const Complex> samples, const QuadConfig& config);

/// Schwarz-Pick-type estimate: |w_z| + |w_zbar| <= pick_bound.
CheckRecord check_thm2(const ProblemData& problem, std::span<const Complex> samples, const QuadConfig& config);

/// |G1(z)| <= ||gamma|| n1(|z|) and |G2(z)| <= ||g|| n2(|z|).
CheckRecord check_g_operator_bounds(const ProblemData& problem, std::span<const Complex> samples,
                                    const QuadConfig& config);

/// |D G1(z) - D G1(0)| <= ||gamma|| m1 |z| and
/// |D G2(z) - D G2(0)| <= ||g|| (m2 |z| + 4 log((1+|z|)/(1-|z|))) for D = d/dz
/// and D = d/dzbar. Samples must satisfy |z| <= 0.9.
CheckRecord check_lemma_derivative_bounds(const ProblemData& problem, std::span<const Complex> samples,
                                          const QuadConfig& config);

/// |a_n| + |b_n| <= 4M/pi (n >= 1), |a_0| <= M for the harmonic extension
/// sum a_n z^n + sum b_n zbar^n, and
/// |dP(z) - dP(0)| + |dbarP(z) - dbarP(0)| <= (4M/pi)|z|(2-|z|)/(1-|z|)^2.
CheckRecord check_harmonic_coefficients(const BoundaryTrace& gamma0, double M, std::span<const Complex> samples);

/// lambda(D_w(0)) >= 1/L4 with L4 from the sampled norms.
CheckRecord check_jacobian_floor(const ProblemData& problem, const QuadConfig& config);

/// Landau-type check for a problem normalized so that w(0) = 0, J_w(0) = 1:
/// (a) lambda(D_w(0)) >= 1/L4; (b) no two points of the grid
/// r0 (i+1)/(n+1) e^{2 pi i j/n} share an image; (c) min |w - w(0)| over
/// boundary_samples points of |z| = r0, recorded next to R0_lower.
/// worst_slack is lambda - 1/L4, or minus the collision count when (b) fails.
/// Throws std::invalid_argument when the normalization does not hold.
CheckRecord check_landau(const ProblemData& problem, const BoundParams& params, const QuadConfig& config,
                         int grid_n = 41, int boundary_samples = 720);

/// |a_n| + |b_n| of the harmonic extension of gamma0.
double harmonic_coefficient_sum(const BoundaryTrace& gamma0, int n);

/// Boundary values of the extremal harmonic map for n = 1 and M = 1:
/// (2/pi) arg((1+e^{it})/(1-e^{it})) sampled at 2 pi k / samples, which is
/// +1 on (0, pi), -1 on (pi, 2 pi) and 0 at the jumps.
BoundaryTrace extremal_trace(int samples = 8192);

// ---------------------------------------------------------------- fixtures

struct NamedPolynomial {
    std::string name;
    BihPolynomial w;
};

/// Uniform double in [lo, hi) from the top 53 bits of the generator.
double uniform(std::mt19937_64& rng, double lo, double hi);

/// All monomials with p + q <= degree, coefficients uniform in the unit box.
BihPolynomial random_polynomial(std::mt19937_64& rng, int degree);

/// Drops the constant term and rescales so that J_w(0) = 1; a polynomial with
/// J_w(0) < 0 is replaced by its complex conjugate first. Returns nullopt
/// when |J_w(0)| < min_jacobian.
std::optional<BihPolynomial> normalize_at_origin(const BihPolynomial& w, double min_jacobian = 0.05);

/// z^2 zbar^2, z^3 zbar + z, z^3 zbar^3, z, and five random degree-6 polynomials.
std::vector<NamedPolynomial> oracle_fixtures(std::uint64_t seed);

/// count random degree-6 polynomials normalized at the origin.
std::vector<NamedPolynomial> normalized_random_problems(std::uint64_t seed, int count = 20);

/// count points uniformly distributed (by area) in |z| <= radius.
std::vector<Complex> random_disk_points(std::mt19937_64& rng, int count, double radius);

// ---------------------------------------------------------------- suites

enum class Suite { oracle, pde, thm1, thm2, claims, lemmas, coeff, landau, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Runs a suite. The report depends only on (suite, seed, config).
VerificationReport run_suite(Suite suite, std::uint64_t seed, const QuadConfig& config = {});

}  // namespace bvpdn
