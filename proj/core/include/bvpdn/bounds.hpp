#pragma once

#include <utility>
#include <vector>

namespace bvpdn {

/// Growth functions of the Schwarz-type (n1, n2) and Schwarz-Pick-type (n3, n4)
/// estimates. All require 0 <= t <= 1 and throw std::domain_error otherwise.
double n1(double t);
double n2(double t);
double n3(double t);
double n4(double t);

/// Constants of the derivative-difference estimates for G1 and G2.
double m1();
double m2();

/// Majorants ||gamma0|| <= L1, ||gamma|| <= L2, ||g|| <= L3 and |c|.
struct BoundParams {
    double L1 = 0.0;
    double L2 = 0.0;
    double L3 = 0.0;
    double c_abs = 0.0;

    /// Throws std::invalid_argument unless every field is finite and >= 0.
    void validate() const;
};

/// L4 = 2|c| + (4/pi) L1 + L2 n3(0) + L3 n4(0)
double l4(const BoundParams& p);
/// L5 = |c| + L2 m1 + L3 m2
double l5(const BoundParams& p);

/// (4/pi) P0_abs arctan t + |c| + L2 n1(t) + L3 n2(t), for 0 <= t <= 1.
/// P0_abs is the sup norm of the Poisson part (or its majorant L1).
double schwarz_bound(const BoundParams& p, double P0_abs, double t);

/// (4/pi) P0_abs / (1 - t^2) + 2|c| + L2 n3(t) + L3 n4(t), for 0 <= t < 1.
double pick_bound(const BoundParams& p, double P0_abs, double t);

/// phi(r) = 1/L4 - 2r((4 L1/pi)(2-r)/(1-r)^2 + L5) - 8 L3 log((1+r)/(1-r)),
/// strictly decreasing on [0, 1). Requires L4 > 0 and 0 <= r < 1.
double phi(double r, const BoundParams& p);

struct LandauResult {
    double r0 = 0.0;
    double R0_lower = 0.0;
    double L4 = 0.0;
    double L5 = 0.0;
    std::pair<double, double> bracket{};  // phi(first) > 0 > phi(second)
    int iterations = 0;
};

/// Radius of the covered disk for a univalence radius r0:
/// (8 L1/pi)(r0/(1-r0))^2 + L5 r0^2 + 8 L3 r0^2 (3 - r0^2)/(1 - r0^2)^2.
double covered_radius(const BoundParams& p, double r0);

/// Root of phi by bisection on [0, 1 - 1e-12], stopping once |phi(r0)| <= tol
/// (at most 200 halvings). Throws std::domain_error when L4 = 0 or phi keeps
/// its sign on the interval, std::runtime_error when tol is not reached.
LandauResult landau_radius(const BoundParams& p, double tol = 1e-12);

/// Everything the bounds command reports for one parameter set.
struct BoundsReport {
    struct Row {
        double t;
        double n1, n2, n3, n4;
    };
    BoundParams params;
    std::vector<Row> table;  // t = 0, 0.1, ..., 1
    double m1 = 0.0;
    double m2 = 0.0;
    LandauResult landau;
};

BoundsReport bounds_report(const BoundParams& p, double tol = 1e-12);

}  // namespace bvpdn
