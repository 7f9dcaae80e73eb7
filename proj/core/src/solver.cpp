#include "bvpdn/solver.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>

#include "bvpdn/parallel.hpp"

namespace bvpdn {
namespace {

using Triple = std::array<Complex, 3>;

}  // namespace

JacobianSummary JacobianSummary::from(Complex wz, Complex wzbar) {
    JacobianSummary j;
    j.wz = wz;
    j.wzbar = wzbar;
    const double a = std::abs(wz);
    const double b = std::abs(wzbar);
    j.norm = a + b;
    j.lambda = std::abs(a - b);
    j.det = (a - b) * (a + b);
    return j;
}

Solver::Solver(ProblemData problem, QuadConfig config, SeriesPolicy policy)
    : problem_(std::move(problem)), config_(config), policy_(policy) {
    config_.validate();
    policy_.validate();
    const auto n = static_cast<std::size_t>(config_.n_theta);
    nodes_.resize(n);
    angles_.resize(n);
    gamma_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * double(k) / double(n);
        angles_[k] = t;
        nodes_[k] = std::polar(1.0, t);
        gamma_[k] = problem_.gamma(t);
    }
    if (problem_.gamma0.is_tabulated()) {
        gamma0_.resize(n);
        for (std::size_t k = 0; k < n; ++k) gamma0_[k] = problem_.gamma0(angles_[k]);
    }
    gamma_zero_ = problem_.gamma.is_zero();
    g_zero_ = problem_.g.is_zero();
}

void Solver::check_point(Complex z) const {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("solver: z must be finite");
    }
    if (!(std::abs(z) < 1.0)) throw std::domain_error("solver: requires |z| < 1");
}

Complex Solver::poisson_part(Complex z) const {
    check_point(z);
    if (poisson_exact()) return problem_.gamma0.extension(z);
    std::vector<Complex> terms(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) terms[k] = poisson(z, angles_[k]) * gamma0_[k];
    return detail::pairwise_sum<Complex>(terms) / double(nodes_.size());
}

Gradient Solver::poisson_gradient(Complex z) const {
    check_point(z);
    if (poisson_exact()) return {problem_.gamma0.extension_dz(z), problem_.gamma0.extension_dzbar(z)};
    std::vector<Complex> dz(nodes_.size());
    std::vector<Complex> dzbar(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Complex pz = poisson_dz(z, angles_[k]);
        dz[k] = pz * gamma0_[k];
        dzbar[k] = std::conj(pz) * gamma0_[k];
    }
    const double scale = 1.0 / double(nodes_.size());
    return {scale * detail::pairwise_sum<Complex>(dz), scale * detail::pairwise_sum<Complex>(dzbar)};
}

Complex Solver::g1(Complex z) const {
    check_point(z);
    if (gamma_zero_) return {};
    std::vector<Complex> terms(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        terms[k] = detail::h2_unchecked(z, nodes_[k], policy_) * gamma_[k];
    }
    // (1/4pi) int H2 gamma dt = (1/2) * mean.
    return 0.5 / double(nodes_.size()) * detail::pairwise_sum<Complex>(terms);
}

Gradient Solver::g1_gradient(Complex z) const {
    check_point(z);
    if (gamma_zero_) return {};
    std::vector<Complex> dz(nodes_.size());
    std::vector<Complex> dzbar(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Complex kz = detail::h2_with_dz_unchecked(z, nodes_[k], policy_).dz;
        dz[k] = kz * gamma_[k];
        dzbar[k] = std::conj(kz) * gamma_[k];
    }
    const double scale = 0.5 / double(nodes_.size());
    return {scale * detail::pairwise_sum<Complex>(dz), scale * detail::pairwise_sum<Complex>(dzbar)};
}

DiskIntegral<Complex> Solver::g2(Complex z) const {
    check_point(z);
    if (g_zero_) return {};
    auto result = integrate_disk(
        [&](Complex zeta) { return detail::h2_unchecked(z, zeta, policy_) * problem_.g(zeta); }, config_, z);
    result.value /= std::numbers::pi;
    result.error_estimate /= std::numbers::pi;
    return result;
}

Gradient Solver::g2_gradient(Complex z) const {
    const PointSolution s = solve_at(z);
    return s.g2_grad;
}

Complex Solver::w(Complex z) const {
    check_point(z);
    return -problem_.c * (1.0 - std::norm(z)) + poisson_part(z) + g1(z) - g2(z).value;
}

PointSolution Solver::solve_at(Complex z) const {
    check_point(z);
    PointSolution s;
    s.z = z;
    s.poisson = poisson_part(z);
    s.poisson_grad = poisson_gradient(z);

    if (!gamma_zero_) {
        std::vector<Triple> terms(nodes_.size());
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const KernelSample ks = detail::h2_with_dz_unchecked(z, nodes_[k], policy_);
            terms[k] = {ks.value * gamma_[k], ks.dz * gamma_[k], std::conj(ks.dz) * gamma_[k]};
        }
        const Triple sum = detail::pairwise_sum<Triple>(terms);
        const double scale = 0.5 / double(nodes_.size());
        s.g1 = scale * sum[0];
        s.g1_grad = {scale * sum[1], scale * sum[2]};
    }

    if (!g_zero_) {
        const auto disk = integrate_disk(
            [&](Complex zeta) -> Triple {
                const KernelSample ks = detail::h2_with_dz_unchecked(z, zeta, policy_);
                const Complex g = problem_.g(zeta);
                return {ks.value * g, ks.dz * g, std::conj(ks.dz) * g};
            },
            config_, z);
        const double scale = 1.0 / std::numbers::pi;
        s.g2 = scale * disk.value[0];
        s.g2_grad = {scale * disk.value[1], scale * disk.value[2]};
        s.accuracy_warning = disk.accuracy_warning;
        s.quad_error_estimate = scale * disk.error_estimate;
    }

    const Complex c = problem_.c;
    s.w = -c * (1.0 - std::norm(z)) + s.poisson + s.g1 - s.g2;
    s.wz = c * std::conj(z) + s.poisson_grad.dz + s.g1_grad.dz - s.g2_grad.dz;
    s.wzbar = c * z + s.poisson_grad.dzbar + s.g1_grad.dzbar - s.g2_grad.dzbar;
    return s;
}

JacobianSummary Solver::jacobian(Complex z) const {
    const PointSolution s = solve_at(z);
    return JacobianSummary::from(s.wz, s.wzbar);
}

std::vector<PointSolution> Solver::solve_many(std::span<const Complex> points) const {
    std::vector<PointSolution> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = solve_at(points[i]); });
    return out;
}

std::vector<Complex> Solver::w_many(std::span<const Complex> points) const {
    std::vector<Complex> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = w(points[i]); });
    return out;
}

Complex eval_poisson_part(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).poisson_part(z);
}

Complex eval_g1(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).g1(z);
}

Complex eval_g2(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).g2(z).value;
}

Complex eval_w(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).w(z);
}

Complex eval_w_dz(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).solve_at(z).wz;
}

Complex eval_w_dzbar(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).solve_at(z).wzbar;
}

JacobianSummary jacobian(const ProblemData& problem, Complex z, const QuadConfig& config) {
    return Solver(problem, config).jacobian(z);
}

void write_solution_csv(std::ostream& out, std::span<const PointSolution> rows) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "re_z,im_z,re_w,im_w,abs_w,re_wz,im_wz,re_wzbar,im_wzbar\n";
    out << std::setprecision(17);
    for (const PointSolution& r : rows) {
        out << r.z.real() << ',' << r.z.imag() << ',' << r.w.real() << ',' << r.w.imag() << ',' << std::abs(r.w)
            << ',' << r.wz.real() << ',' << r.wz.imag() << ',' << r.wzbar.real() << ',' << r.wzbar.imag() << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace bvpdn
