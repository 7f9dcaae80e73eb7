#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bvpdn/bounds.hpp"

namespace bvpdn {
namespace {

// Independent 40-digit evaluations (mpmath) of the closed forms.
TEST(Bounds, GrowthFunctionsAgainstHighPrecision) {
    struct Row {
        double t, n1, n2, n3, n4;
    };
    for (const Row& r : {Row{0.0, 8.972803961856776, 14.52547504328192, 6.615767075512240, 6.421500526380568},
                         Row{0.5, 8.705299982114392, 13.99046708379715, 7.485013526738264, 7.357670133521097},
                         Row{1.0, 7.902788042887238, 12.38544320534284, 7.952721042477259, 8.026147117003607}}) {
        EXPECT_NEAR(n1(r.t), r.n1, 1e-12) << r.t;
        EXPECT_NEAR(n2(r.t), r.n2, 1e-12) << r.t;
        EXPECT_NEAR(n3(r.t), r.n3, 1e-12) << r.t;
        EXPECT_NEAR(n4(r.t), r.n4, 1e-12) << r.t;
    }
    EXPECT_NEAR(m1(), 4.466951714896955, 1e-12);
    EXPECT_NEAR(m2(), 5.970508107983233, 1e-12);
}

TEST(Bounds, GrowthFunctionsAreMonotone) {
    for (int i = 0; i < 100; ++i) {
        const double a = i / 100.0;
        const double b = (i + 1) / 100.0;
        EXPECT_GT(n1(a), n1(b));
        EXPECT_GT(n2(a), n2(b));
        EXPECT_LT(n3(a), n3(b));
        EXPECT_LT(n4(a), n4(b));
    }
    EXPECT_THROW(n1(-0.1), std::domain_error);
    EXPECT_THROW(n4(1.5), std::domain_error);
}

TEST(Bounds, LandauUnitParameters) {
    const BoundParams p{1.0, 1.0, 1.0, 0.0};
    EXPECT_NEAR(l4(p), 14.31050714662797, 1e-12);
    EXPECT_NEAR(l5(p), 10.43745982288019, 1e-12);
    const LandauResult r = landau_radius(p);
    EXPECT_GT(r.r0, 0.0015);
    EXPECT_LT(r.r0, 0.002);
    EXPECT_LE(std::abs(phi(r.r0, p)), 1e-12);
    EXPECT_NEAR(r.r0, 0.0016645465698124579, 1e-12);
    EXPECT_NEAR(r.R0_lower, 1.0249581927059884e-4, 1e-14);
    EXPECT_LE(r.bracket.first, r.r0);
    EXPECT_GE(r.bracket.second, r.r0);
    EXPECT_GT(phi(r.bracket.first, p), 0.0 - 1e-12);
}

TEST(Bounds, LandauFrozenCases) {
    struct Case {
        BoundParams p;
        double L4, L5, r0, R0;
    };
    for (const Case& c : {
             Case{{1.0, 0.0, 0.0, 0.0}, 1.2732395447351627, 0.0, 0.12577029234976929, 0.052704188936003807},
             Case{{0.0, 0.0, 1.0, 0.0}, 6.4215005263805683, 5.970508107983233, 0.0055733806453059487,
                  9.3099965752352682e-4},
             Case{{0.0, 0.0, 0.0, 1.0}, 2.0, 1.0, 0.25, 0.0625},
             Case{{1.1, 0.2, 0.0, 0.0}, 2.7237169143111269, 0.89339034297939107, 0.047007499792110699,
                  0.0087894787563999005},
         }) {
        const LandauResult r = landau_radius(c.p);
        EXPECT_NEAR(r.L4, c.L4, 1e-12);
        EXPECT_NEAR(r.L5, c.L5, 1e-12);
        EXPECT_NEAR(r.r0, c.r0, 1e-10);
        EXPECT_NEAR(r.R0_lower, c.R0, 1e-10);
    }
    EXPECT_NEAR(phi(0.002, {1.0, 1.0, 1.0, 0.0}), -0.014087712, 1e-8);
    EXPECT_NEAR(phi(0.0015, {1.0, 1.0, 1.0, 0.0}), 0.0069096675, 1e-9);
}

TEST(Bounds, PhiStrictlyDecreasingOnRandomParameters) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const BoundParams p{u(rng), u(rng), u(rng), u(rng)};
        double prev = phi(0.0, p);
        for (int i = 1; i < 200; ++i) {
            const double cur = phi(i / 200.0, p);
            ASSERT_LT(cur, prev) << trial << " " << i;
            prev = cur;
        }
    }
}

TEST(Bounds, ErrorsAndValidation) {
    EXPECT_THROW(landau_radius({}), std::domain_error);
    EXPECT_THROW((BoundParams{-1.0, 0.0, 0.0, 0.0}.validate()), std::invalid_argument);
    EXPECT_THROW((BoundParams{std::nan(""), 0.0, 0.0, 0.0}.validate()), std::invalid_argument);
    EXPECT_THROW(pick_bound({1.0, 0.0, 0.0, 0.0}, 1.0, 1.0), std::domain_error);
    EXPECT_THROW(phi(1.0, {1.0, 0.0, 0.0, 0.0}), std::domain_error);
}

TEST(Bounds, SchwarzAndPickBoundsAtOrigin) {
    const BoundParams p{1.0, 2.0, 3.0, 0.5};
    EXPECT_NEAR(schwarz_bound(p, 1.0, 0.0), 0.5 + 2.0 * n1(0.0) + 3.0 * n2(0.0), 1e-12);
    EXPECT_NEAR(pick_bound(p, 1.0, 0.0), 4.0 / std::numbers::pi + 1.0 + 2.0 * n3(0.0) + 3.0 * n4(0.0), 1e-12);
    EXPECT_NEAR(pick_bound(p, p.L1, 0.0), l4(p), 1e-12);
}

TEST(Bounds, ReportTable) {
    const BoundsReport r = bounds_report({1.0, 1.0, 1.0, 0.0});
    ASSERT_EQ(r.table.size(), 11u);
    EXPECT_DOUBLE_EQ(r.table.front().t, 0.0);
    EXPECT_DOUBLE_EQ(r.table.back().t, 1.0);
    EXPECT_DOUBLE_EQ(r.table[5].n3, n3(0.5));
    EXPECT_DOUBLE_EQ(r.landau.r0, landau_radius({1.0, 1.0, 1.0, 0.0}).r0);
}

}  // namespace
}  // namespace bvpdn
