#pragma once

#include <complex>

namespace bvpdn {

using Complex = std::complex<double>;

/// Switch between power series and closed forms for the log(1-u) families.
///
/// The closed forms divide by u or u^2 and cancel catastrophically as u -> 0,
/// so below `switch_radius` the (geometrically convergent) series is summed
/// instead. Summation stops after `max_terms` terms or once a term falls
/// below `term_tol` relative to the running sum.
struct SeriesPolicy {
    double switch_radius = 0.5;
    int max_terms = 64;
    double term_tol = 1e-17;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// The three removable-singularity families built on log(1-u):
///   A(u) = ((1-u)/u) log(1-u)                    A(0) = -1
///   B(u) = log(1-u)/u^2 + 1/u                    B(0) = -1/2
///   C(u) = ((1-u^2)/u^2) log(1-u) + 1/u - 1      C(0) = -3/2
enum class LogFamily { A, B, C };

/// Poisson kernel (1-|z|^2)/|1 - z e^{-it}|^2. Requires |z| < 1.
double poisson(Complex z, double t);

/// Analytic Wirtinger derivative d/dz of the Poisson kernel. Requires |z| < 1.
Complex poisson_dz(Complex z, double t);

/// Biharmonic Green-type kernel H2(z, zeta) of the Dirichlet-Neumann problem.
///
/// Requires |z| <= 1, |zeta| <= 1 and |z conj(zeta)| < 1. The diagonal
/// zeta == z is defined by continuity (the -|zeta-z|^2 log|zeta-z|^2 term
/// extends by zero). Throws std::invalid_argument on non-finite input and
/// std::domain_error outside the closed disk.
double h2(Complex z, Complex zeta, const SeriesPolicy& policy = {});

/// d/dz H2(z, zeta), evaluated as the sum of the four component kernels
/// K5 + K6 + K7 + K8. Since H2 is real, d/dzbar H2 = conj(h2_dz).
///
/// Requires |z| < 1, |zeta| <= 1 and zeta != z (the derivative kernel is only
/// Hölder continuous on the diagonal, so it is not extended there).
Complex h2_dz(Complex z, Complex zeta, const SeriesPolicy& policy = {});

/// Evaluates one of the A/B/C families at |u| < 1.
Complex stable_log_family(Complex u, LogFamily which, const SeriesPolicy& policy = {});

/// H2 and its z-derivative from one shared evaluation of the logarithms.
struct KernelSample {
    double value = 0.0;
    Complex dz{};
};

KernelSample h2_with_dz(Complex z, Complex zeta, const SeriesPolicy& policy = {});

namespace detail {

/// log(1 - u) without the cancellation std::log(1.0 - u) suffers for small |u|.
Complex log1m(Complex u);

/// The four-term complex evaluation of H2 before the real part is taken.
/// Unchecked: callers guarantee the preconditions of h2().
Complex h2_complex(Complex z, Complex zeta, const SeriesPolicy& policy);

/// Unchecked fast paths used inside quadrature loops.
double h2_unchecked(Complex z, Complex zeta, const SeriesPolicy& policy);
KernelSample h2_with_dz_unchecked(Complex z, Complex zeta, const SeriesPolicy& policy);

}  // namespace detail

}  // namespace bvpdn
