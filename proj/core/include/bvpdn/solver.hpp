#pragma once

#include <complex>
#include <ostream>
#include <span>
#include <vector>

#include "bvpdn/kernel.hpp"
#include "bvpdn/problems.hpp"
#include "bvpdn/quadrature.hpp"

namespace bvpdn {

/// Wirtinger derivatives (d/dz, d/dzbar) of one component of w.
struct Gradient {
    Complex dz{};
    Complex dzbar{};
};

/// w and its components at a single point, with quadrature diagnostics.
struct PointSolution {
    Complex z{};
    Complex w{};
    Complex wz{};
    Complex wzbar{};

    Complex poisson{};  // P[gamma0](z)
    Complex g1{};       // G1[gamma](z)
    Complex g2{};       // G2[g](z)
    Gradient poisson_grad;
    Gradient g1_grad;
    Gradient g2_grad;

    bool accuracy_warning = false;
    double quad_error_estimate = 0.0;  // disk-integral estimate, normalized measure
};

struct JacobianSummary {
    Complex wz{};
    Complex wzbar{};
    double norm = 0.0;    // |wz| + |wzbar|
    double lambda = 0.0;  // ||wz| - |wzbar||
    double det = 0.0;     // |wz|^2 - |wzbar|^2

    static JacobianSummary from(Complex wz, Complex wzbar);
};

/// Evaluates w(z) = -c(1-|z|^2) + P[gamma0](z) + G1[gamma](z) - G2[g](z) for one
/// problem. Boundary samples are taken once at construction; every method is
/// const and safe to call from several threads.
///
/// P uses the exact harmonic extension when gamma0 is held in Fourier form and
/// Poisson-kernel quadrature when it is tabulated. G1 is always computed by
/// the trapezoid rule on n_theta boundary nodes, G2 by the singular disk rule
/// centred at z and divided by pi.
class Solver {
public:
    explicit Solver(ProblemData problem, QuadConfig config = {}, SeriesPolicy policy = {});

    const ProblemData& problem() const noexcept { return problem_; }
    const QuadConfig& config() const noexcept { return config_; }
    const SeriesPolicy& policy() const noexcept { return policy_; }
    /// True when P is evaluated by exact harmonic extension.
    bool poisson_exact() const noexcept { return !problem_.gamma0.is_tabulated(); }

    Complex poisson_part(Complex z) const;
    Gradient poisson_gradient(Complex z) const;
    Complex g1(Complex z) const;
    Gradient g1_gradient(Complex z) const;
    DiskIntegral<Complex> g2(Complex z) const;
    Gradient g2_gradient(Complex z) const;

    /// Value only; skips the derivative kernels.
    Complex w(Complex z) const;
    /// Value, derivatives and components from one pass over each quadrature.
    PointSolution solve_at(Complex z) const;
    JacobianSummary jacobian(Complex z) const;

    /// Parallel over points; results are in input order and independent of
    /// the worker count.
    std::vector<PointSolution> solve_many(std::span<const Complex> points) const;
    std::vector<Complex> w_many(std::span<const Complex> points) const;

private:
    void check_point(Complex z) const;

    ProblemData problem_;
    QuadConfig config_;
    SeriesPolicy policy_;
    std::vector<Complex> nodes_;        // e^{i t_k}
    std::vector<double> angles_;        // t_k
    std::vector<Complex> gamma_;        // gamma(t_k)
    std::vector<Complex> gamma0_;       // gamma0(t_k), tabulated gamma0 only
    bool gamma_zero_ = true;
    bool g_zero_ = true;
};

Complex eval_poisson_part(const ProblemData& problem, Complex z, const QuadConfig& config = {});
Complex eval_g1(const ProblemData& problem, Complex z, const QuadConfig& config = {});
Complex eval_g2(const ProblemData& problem, Complex z, const QuadConfig& config = {});
Complex eval_w(const ProblemData& problem, Complex z, const QuadConfig& config = {});
Complex eval_w_dz(const ProblemData& problem, Complex z, const QuadConfig& config = {});
Complex eval_w_dzbar(const ProblemData& problem, Complex z, const QuadConfig& config = {});
JacobianSummary jacobian(const ProblemData& problem, Complex z, const QuadConfig& config = {});

/// CSV with header re_z,im_z,re_w,im_w,abs_w,re_wz,im_wz,re_wzbar,im_wzbar and
/// 17 significant digits per value.
void write_solution_csv(std::ostream& out, std::span<const PointSolution> rows);

}  // namespace bvpdn
