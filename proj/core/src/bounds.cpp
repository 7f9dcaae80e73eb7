#include "bvpdn/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bvpdn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

const double kLog4 = std::log(4.0);
const double kS1 = std::sqrt(2.0 * kPi2 / 3.0 - 2.0);  // (2 pi^2/3 - 2)^{1/2}
const double kS2 = std::sqrt(kPi2 / 6.0);               // (pi^2/6)^{1/2}
const double kS3 = std::sqrt(kPi2 / 3.0 + 1.0);
const double kS4 = std::sqrt(kPi2 / 6.0 - 1.0);
const double kS5 = std::sqrt(kPi2 / 3.0 - 0.5);
const double kS6 = std::sqrt(kPi2 / 6.0 - 1.25);
const double kS7 = std::sqrt(kPi2 / 3.0 - 2.75);

void check_t(double t, const char* who) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error(std::string(who) + ": requires 0 <= t <= 1");
}

}  // namespace

double n1(double t) {
    check_t(t, "n1");
    return 2.0 * kLog4 + 0.5 * (1.0 - t * t) * kS1 + 4.0 * kS2;
}

double n2(double t) {
    check_t(t, "n2");
    return 4.0 * kLog4 + (1.0 - t * t) * kS1 + 16.0 / 3.0 * kS2;
}

double n3(double t) {
    check_t(t, "n3");
    return 2.0 * kS3 + t * kS1 + (1.0 - t * t) * kS4 + kS5;
}

double n4(double t) {
    check_t(t, "n4");
    return 2.0 * (kLog4 + 1.0) + t * kS1 + 2.0 / 3.0 * (1.0 - t * t) * kS4 + 2.0 / 3.0 * kS5;
}

double m1() { return 0.5 * (2.0 * kPi / std::sqrt(3.0) + 1.0 + kS1 + kS6 + kS4 + kS7); }

double m2() { return kLog4 + 1.0 + kS1 + 2.0 / 3.0 * (kS6 + kS4 + kS7); }

void BoundParams::validate() const {
    for (const double v : {L1, L2, L3, c_abs}) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("BoundParams: L1, L2, L3 and |c| must be finite and non-negative");
        }
    }
}

double l4(const BoundParams& p) {
    p.validate();
    return 2.0 * p.c_abs + 4.0 / kPi * p.L1 + p.L2 * n3(0.0) + p.L3 * n4(0.0);
}

double l5(const BoundParams& p) {
    p.validate();
    return p.c_abs + p.L2 * m1() + p.L3 * m2();
}

double schwarz_bound(const BoundParams& p, double P0_abs, double t) {
    p.validate();
    check_t(t, "schwarz_bound");
    if (!(P0_abs >= 0.0)) throw std::invalid_argument("schwarz_bound: P0_abs must be >= 0");
    return 4.0 / kPi * P0_abs * std::atan(t) + p.c_abs + p.L2 * n1(t) + p.L3 * n2(t);
}

double pick_bound(const BoundParams& p, double P0_abs, double t) {
    p.validate();
    if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("pick_bound: requires 0 <= t < 1");
    if (!(P0_abs >= 0.0)) throw std::invalid_argument("pick_bound: P0_abs must be >= 0");
    return 4.0 / kPi * P0_abs / (1.0 - t * t) + 2.0 * p.c_abs + p.L2 * n3(t) + p.L3 * n4(t);
}

double phi(double r, const BoundParams& p) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("phi: requires 0 <= r < 1");
    const double L4 = l4(p);
    if (!(L4 > 0.0)) throw std::domain_error("phi: L4 = 0, all parameters vanish");
    const double L5 = l5(p);
    const double harmonic = 4.0 * p.L1 / kPi * (2.0 - r) / ((1.0 - r) * (1.0 - r));
    return 1.0 / L4 - 2.0 * r * (harmonic + L5) - 8.0 * p.L3 * std::log1p(2.0 * r / (1.0 - r));
}

double covered_radius(const BoundParams& p, double r0) {
    const double L5 = l5(p);
    const double q = r0 / (1.0 - r0);
    const double s = 1.0 - r0 * r0;
    return 8.0 * p.L1 / kPi * q * q + L5 * r0 * r0 + 8.0 * p.L3 * r0 * r0 * (3.0 - r0 * r0) / (s * s);
}

LandauResult landau_radius(const BoundParams& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("landau_radius: tol must be positive");
    LandauResult res;
    res.L4 = l4(p);
    if (!(res.L4 > 0.0)) throw std::domain_error("landau_radius: L4 = 0, the Landau radius is undefined");
    res.L5 = l5(p);

    double lo = 0.0;
    double hi = 1.0 - 1e-12;
    if (!(phi(hi, p) < 0.0)) {
        throw std::domain_error("landau_radius: phi has no sign change on [0, 1), parameters are degenerate");
    }
    for (int it = 1; it <= 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = phi(mid, p);
        res.iterations = it;
        if (std::abs(f) <= tol) {
            res.r0 = mid;
            res.bracket = {lo, hi};
            res.R0_lower = covered_radius(p, mid);
            return res;
        }
        (f > 0.0 ? lo : hi) = mid;
    }
    throw std::runtime_error("landau_radius: tolerance not reached after 200 bisection steps");
}

BoundsReport bounds_report(const BoundParams& p, double tol) {
    BoundsReport report;
    report.params = p;
    for (int i = 0; i <= 10; ++i) {
        const double t = 0.1 * i;
        report.table.push_back({t, n1(t), n2(t), n3(t), n4(t)});
    }
    report.m1 = m1();
    report.m2 = m2();
    report.landau = landau_radius(p, tol);
    return report;
}

}  // namespace bvpdn
