#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bvpdn/solver.hpp"

namespace bvpdn {
namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Complex> kPoints{{0.0, 0.0}, {0.3, 0.1}, {-0.5, 0.45}, {0.0, -0.9}, {0.62, -0.6}};

TEST(Solver, ManufacturedDoubleSquare) {
    const BihPolynomial w({{2, 2, 1.0}});
    const Solver solver(manufacture(w));
    for (Complex z : kPoints) {
        const PointSolution s = solver.solve_at(z);
        EXPECT_LE(std::abs(s.w - w(z)), 1e-10) << z;
        EXPECT_LE(std::abs(s.wz - w.dz(z)), 1e-9) << z;
        EXPECT_LE(std::abs(s.wzbar - w.dzbar(z)), 1e-9) << z;
        EXPECT_LE(std::abs(s.w - solver.w(z)), 1e-11);
        EXPECT_FALSE(s.accuracy_warning);
    }
}

TEST(Solver, ManufacturedMixedPolynomial) {
    const BihPolynomial w({{3, 1, {0.4, -0.2}}, {1, 0, 1.0}, {0, 3, {0.0, 0.7}}, {2, 3, -0.3}, {1, 1, 0.5}});
    const ProblemData p = manufacture(w);
    for (Complex z : kPoints) {
        EXPECT_LE(std::abs(eval_w(p, z) - w(z)), 1e-10) << z;
        EXPECT_LE(std::abs(eval_w_dz(p, z) - w.dz(z)), 1e-9) << z;
        EXPECT_LE(std::abs(eval_w_dzbar(p, z) - w.dzbar(z)), 1e-9) << z;
    }
}

// Integral of H2(0, zeta) over the disk, normalized measure: -3/4.
TEST(Solver, ConstantSourceAtOrigin) {
    ProblemData one;
    one.g = Source(BihPolynomial({{0, 0, 1.0}}));
    EXPECT_NEAR(eval_g2(one, 0.0).real(), -0.75, 1e-12);
    EXPECT_NEAR(eval_g2(one, 0.0).imag(), 0.0, 1e-15);
}

// A tabulated Dirichlet trace of a disk automorphism extends to the
// automorphism itself, which exercises the Poisson-quadrature path.
TEST(Solver, MobiusTraceCrossCheck) {
    const Complex a{0.3, -0.2};
    auto phi = [&](Complex z) { return (z - a) / (1.0 - std::conj(a) * z); };
    auto dphi = [&](Complex z) { return (1.0 - std::norm(a)) / std::pow(1.0 - std::conj(a) * z, 2); };
    std::vector<Complex> samples;
    const int n = 256;
    for (int k = 0; k < n; ++k) samples.push_back(phi(std::polar(1.0, 2.0 * kPi * k / n)));
    ProblemData p;
    p.gamma0 = BoundaryTrace::tabulated(samples);
    const Solver solver(p);
    EXPECT_FALSE(solver.poisson_exact());
    for (Complex z : kPoints) {
        const PointSolution s = solver.solve_at(z);
        EXPECT_LE(std::abs(s.w - phi(z)), 1e-10) << z;
        EXPECT_LE(std::abs(s.wz - dphi(z)), 1e-8) << z;
        EXPECT_LE(std::abs(s.wzbar), 1e-8) << z;
    }
}

TEST(Solver, DerivativesMatchFiniteDifferences) {
    const BihPolynomial w({{4, 2, {0.3, 0.1}}, {2, 1, -0.8}, {0, 1, 0.6}, {3, 3, {0.0, 0.2}}});
    const ProblemData p = manufacture(w);
    const Solver solver(p);
    const double h = 1e-4;
    for (Complex z : {Complex(0.2, -0.35), Complex(-0.7, 0.1)}) {
        auto diff = [&](Complex step) {
            return (-solver.w(z + 2.0 * step) + 8.0 * solver.w(z + step) - 8.0 * solver.w(z - step) +
                    solver.w(z - 2.0 * step)) /
                   (12.0 * h);
        };
        const Complex dx = diff(h);
        const Complex dy = diff(Complex(0.0, h));
        const PointSolution s = solver.solve_at(z);
        EXPECT_LE(std::abs(s.wz - 0.5 * (dx - Complex(0, 1) * dy)), 1e-7) << z;
        EXPECT_LE(std::abs(s.wzbar - 0.5 * (dx + Complex(0, 1) * dy)), 1e-7) << z;
    }
}

TEST(Solver, ComponentsAddUp) {
    const BihPolynomial w({{2, 2, 1.0}, {3, 0, 0.5}});
    const Solver solver(manufacture(w));
    const Complex z{0.4, 0.2};
    const PointSolution s = solver.solve_at(z);
    const Complex c = solver.problem().c;
    EXPECT_LE(std::abs(s.w - (-c * (1.0 - std::norm(z)) + s.poisson + s.g1 - s.g2)), 1e-14);
    EXPECT_LE(std::abs(s.g1 - solver.g1(z)), 1e-14);
    EXPECT_LE(std::abs(s.g2 - solver.g2(z).value), 1e-13);
    EXPECT_LE(std::abs(s.poisson - solver.poisson_part(z)), 1e-15);
}

TEST(Solver, TabulatedSourceProblem) {
    const BihPolynomial w({{2, 2, 1.0}, {3, 2, 0.25}});
    const ProblemData exact = manufacture(w);
    const BihPolynomial g = derive_source(w);
    const int n_r = 129;
    const int n_theta = 256;
    std::vector<Complex> values;
    for (int i = 0; i < n_r; ++i) {
        for (int j = 0; j < n_theta; ++j) values.push_back(g(std::polar(double(i) / (n_r - 1), 2.0 * kPi * j / n_theta)));
    }
    ProblemData p = exact;
    p.g = Source(TabulatedSource(n_r, n_theta, values));
    p.exact.reset();
    p.provenance = Provenance::tabulated;
    const Solver solver(p);
    for (Complex z : {Complex(0.1, 0.2), Complex(-0.6, 0.3)}) EXPECT_LE(std::abs(solver.w(z) - w(z)), 1e-6) << z;
}

TEST(Solver, ParallelResultsMatchSequential) {
    const BihPolynomial w({{3, 1, 1.0}, {1, 0, 1.0}});
    const Solver solver(manufacture(w));
    const std::vector<PointSolution> many = solver.solve_many(kPoints);
    const std::vector<Complex> values = solver.w_many(kPoints);
    ASSERT_EQ(many.size(), kPoints.size());
    for (std::size_t i = 0; i < kPoints.size(); ++i) {
        const PointSolution one = solver.solve_at(kPoints[i]);
        EXPECT_EQ(many[i].z, kPoints[i]);
        EXPECT_EQ(many[i].w, one.w);
        EXPECT_EQ(many[i].wz, one.wz);
        EXPECT_EQ(values[i], solver.w(kPoints[i]));
    }
}

TEST(Solver, Jacobian) {
    const JacobianSummary j = jacobian(manufacture(BihPolynomial({{1, 0, 1.0}, {0, 1, 0.5}})), Complex(0.2, 0.1));
    EXPECT_NEAR(j.norm, 1.5, 1e-9);
    EXPECT_NEAR(j.lambda, 0.5, 1e-9);
    EXPECT_NEAR(j.det, 0.75, 1e-9);
    const JacobianSummary k = JacobianSummary::from(Complex(0.0, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(k.det, 3.0);
}

TEST(Solver, RejectsPointsOutsideTheDisk) {
    const Solver solver(manufacture(BihPolynomial({{1, 0, 1.0}})));
    EXPECT_THROW(solver.w(1.0), std::domain_error);
    EXPECT_THROW(solver.solve_at(Complex(0.8, 0.8)), std::domain_error);
    EXPECT_THROW(solver.w(Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)), std::invalid_argument);
    QuadConfig bad;
    bad.n_theta = 3;
    EXPECT_THROW(Solver(ProblemData{}, bad), std::invalid_argument);
}

TEST(Solver, StarvedRefinementRaisesWarning) {
    QuadConfig cfg;
    cfg.max_depth = 0;
    cfg.adaptive_tol = 1e-16;
    const Solver solver(manufacture(BihPolynomial({{2, 2, 1.0}})), cfg);
    EXPECT_TRUE(solver.solve_at(Complex(0.3, 0.2)).accuracy_warning);
}

TEST(Solver, CsvFormat) {
    const Solver solver(manufacture(BihPolynomial({{1, 0, 1.0}})));
    const std::vector<PointSolution> rows = solver.solve_many(std::vector<Complex>{Complex(0.5, 0.0)});
    std::ostringstream os;
    write_solution_csv(os, rows);
    const std::string text = os.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "re_z,im_z,re_w,im_w,abs_w,re_wz,im_wz,re_wzbar,im_wzbar");
    EXPECT_NE(text.find("\n0.5,0,"), std::string::npos);
}

}  // namespace
}  // namespace bvpdn
