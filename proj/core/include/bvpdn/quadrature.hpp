#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace bvpdn {

using Complex = std::complex<double>;

/// Quadrature orders and refinement controls shared by every integral.
struct QuadConfig {
    int n_theta = 512;             // boundary / angular nodes, even
    int n_r = 64;                  // radial Gauss-Legendre nodes
    double adaptive_tol = 1e-8;    // per-ray change accepted by the refinement
    int max_depth = 12;            // dyadic splits allowed next to a singular point
    double exclusion_radius = 1e-3;  // panels starting closer than this to the singular point are refined; 0 disables

    void validate() const;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre rule mapped to [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached, thread-safe access to the n-point rule on [0, 1].
const GaussRule& gauss_legendre(int n);

/// The n-point Gauss-Legendre rule on [0, 1] together with an interpolatory
/// companion rule on roughly half of its nodes (every other node, taken
/// symmetrically from both ends). The companion weights are stored per full
/// node, zero off the subset, so both sums come from one set of samples.
struct EmbeddedRule {
    GaussRule gauss;
    std::vector<double> companion_weights;
};

/// Cached, thread-safe.
const EmbeddedRule& embedded_rule(int n);

/// Tensor grid: Gauss-Legendre radii on [0, 1] and uniform angles on [0, 2pi).
struct PolarGrid {
    std::vector<double> radii;
    std::vector<double> radial_weights;
    std::vector<double> angles;

    static PolarGrid make(int n_r, int n_theta);

    /// Weight of node (i, k) for the unnormalized measure dx dy, Jacobian included.
    double weight(std::size_t i) const {
        return radial_weights[i] * radii[i] * (2.0 * std::numbers::pi / double(angles.size()));
    }
};

template <class T>
struct DiskIntegral {
    T value{};
    double error_estimate = 0.0;
    int depth_reached = 0;
    bool accuracy_warning = false;
    std::size_t evaluations = 0;
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(Complex x) { return std::abs(x); }
template <std::size_t N>
double magnitude(const std::array<Complex, N>& x) {
    double m = 0.0;
    for (const auto& c : x) m = std::max(m, std::abs(c));
    return m;
}

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
template <std::size_t N>
bool finite(const std::array<Complex, N>& x) {
    for (const auto& c : x) {
        if (!finite(c)) return false;
    }
    return true;
}

inline double scaled(double w, double x) { return w * x; }
inline Complex scaled(double w, Complex x) { return w * x; }
template <std::size_t N>
std::array<Complex, N> scaled(double w, std::array<Complex, N> x) {
    for (auto& c : x) c *= w;
    return x;
}

inline void accumulate(double& a, double b) { a += b; }
inline void accumulate(Complex& a, Complex b) { a += b; }
template <std::size_t N>
void accumulate(std::array<Complex, N>& a, const std::array<Complex, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
}

template <class T>
T difference(T a, const T& b) {
    accumulate(a, scaled(-1.0, b));
    return a;
}

/// Fixed-order pairwise summation; the result depends only on the input order.
template <class T>
T pairwise_sum(std::span<const T> values) {
    if (values.empty()) return T{};
    if (values.size() <= 8) {
        T sum = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) accumulate(sum, values[i]);
        return sum;
    }
    const std::size_t half = values.size() / 2;
    T left = pairwise_sum(values.first(half));
    accumulate(left, pairwise_sum(values.subspan(half)));
    return left;
}

[[noreturn]] void throw_non_finite(Complex where);

/// Distance from z0 to the unit circle along direction e^{i phi}.
inline double ray_length(Complex z0, double phi) {
    const double b = z0.real() * std::cos(phi) + z0.imag() * std::sin(phi);
    const double c = 1.0 - std::norm(z0);
    const double root = std::sqrt(b * b + c);
    return b > 0.0 ? c / (b + root) : root - b;
}

template <class T>
struct PanelSums {
    T fine{};
    T rough{};
};

template <class F, class T>
PanelSums<T> gauss_panel(F& f, const EmbeddedRule& rule, Complex z0, Complex dir, double a, double b,
                         bool with_companion, std::size_t& evals) {
    const std::size_t n = rule.gauss.nodes.size();
    const double len = b - a;
    std::vector<T> terms(n);
    std::vector<T> companion(with_companion ? n : 0);
    for (std::size_t j = 0; j < n; ++j) {
        const double rho = a + len * rule.gauss.nodes[j];
        const Complex zeta = z0 + rho * dir;
        const T sample = f(zeta);
        if (!finite(sample)) throw_non_finite(zeta);
        terms[j] = scaled(len * rule.gauss.weights[j] * rho, sample);
        if (with_companion) companion[j] = scaled(len * rule.companion_weights[j] * rho, sample);
    }
    evals += n;
    PanelSums<T> out;
    out.fine = pairwise_sum(std::span<const T>(terms));
    if (with_companion) out.rough = pairwise_sum(std::span<const T>(companion));
    return out;
}

template <class T>
struct RayResult {
    T value{};
    double estimate = 0.0;
    int depth = 0;
    bool warning = false;
};

template <class F, class T>
void refine_panel(F& f, const QuadConfig& cfg, Complex z0, Complex dir, double a, double b, int depth,
                  RayResult<T>& out, std::size_t& evals) {
    const EmbeddedRule& rule = embedded_rule(cfg.n_r);
    const bool near = a < cfg.exclusion_radius;
    const PanelSums<T> sums = gauss_panel<F, T>(f, rule, z0, dir, a, b, near, evals);
    if (!near) {
        accumulate(out.value, sums.fine);
        return;
    }
    const double change = magnitude(difference(sums.fine, sums.rough));
    out.depth = std::max(out.depth, depth);
    if (change <= cfg.adaptive_tol || depth >= cfg.max_depth) {
        accumulate(out.value, sums.fine);
        out.estimate += change;
        if (change > 10.0 * cfg.adaptive_tol) out.warning = true;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine_panel<F, T>(f, cfg, z0, dir, a, mid, depth + 1, out, evals);
    refine_panel<F, T>(f, cfg, z0, dir, mid, b, depth + 1, out, evals);
}

}  // namespace detail

/// Periodic trapezoid rule: (1/2pi) int_0^{2pi} f(t) dt with n equispaced nodes.
/// Throws QuadratureError naming the node when a sample is not finite.
template <class F>
auto integrate_circle(F&& f, int n) {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    if (n < 1) throw std::invalid_argument("integrate_circle: node count must be positive");
    std::vector<T> samples(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * double(k) / double(n);
        T v = f(t);
        if (!detail::finite(v)) {
            throw QuadratureError("integrate_circle: non-finite integrand at node " + std::to_string(k) +
                                  " (t = " + std::to_string(t) + ")");
        }
        samples[static_cast<std::size_t>(k)] = v;
    }
    return detail::scaled(1.0 / double(n), detail::pairwise_sum(std::span<const T>(samples)));
}

/// Integral of f over the unit disk with respect to dx dy (unnormalized; divide
/// by pi for the normalized area measure).
///
/// Without a singular point the tensor product of radial Gauss-Legendre (with
/// Jacobian r) and the angular trapezoid rule is used, and the error estimate
/// compares against the half-order tensor rule.
///
/// With a singular point z0 inside the disk the same tensor construction is
/// laid out in polar coordinates centred at z0: n_theta rays, each integrated
/// over [0, R(phi)] with n_r Gauss-Legendre nodes. Radial panels that start
/// within exclusion_radius of z0 are compared against the embedded companion
/// rule (same samples, about half the degree) and split dyadically toward z0 until the change drops below adaptive_tol or
/// max_depth is reached; an unresolved change above 10 * adaptive_tol sets
/// accuracy_warning. Node positions move smoothly with z0, so the result is a
/// smooth function of the singular point.
template <class F>
auto integrate_disk(F&& f, const QuadConfig& config, std::optional<Complex> singular_at = std::nullopt) {
    using T = std::decay_t<std::invoke_result_t<F&, Complex>>;
    config.validate();
    DiskIntegral<T> result;
    const auto n_theta = static_cast<std::size_t>(config.n_theta);
    const double dtheta = 2.0 * std::numbers::pi / double(n_theta);

    if (singular_at && !(std::abs(*singular_at) < 1.0)) singular_at.reset();

    std::vector<T> rays(n_theta);
    std::vector<T> half_rays;

    if (!singular_at) {
        const GaussRule& full = gauss_legendre(config.n_r);
        const GaussRule& coarse = gauss_legendre(std::max(1, config.n_r / 2));
        half_rays.resize(n_theta / 2);
        std::vector<T> terms(full.nodes.size());
        std::vector<T> coarse_terms(coarse.nodes.size());
        for (std::size_t k = 0; k < n_theta; ++k) {
            const Complex dir = std::polar(1.0, dtheta * double(k));
            for (std::size_t j = 0; j < full.nodes.size(); ++j) {
                const double r = full.nodes[j];
                T sample = f(r * dir);
                if (!detail::finite(sample)) detail::throw_non_finite(r * dir);
                terms[j] = detail::scaled(full.weights[j] * r, sample);
            }
            rays[k] = detail::pairwise_sum(std::span<const T>(terms));
            if (k % 2 == 0 && k / 2 < half_rays.size()) {
                for (std::size_t j = 0; j < coarse.nodes.size(); ++j) {
                    const double r = coarse.nodes[j];
                    T sample = f(r * dir);
                    if (!detail::finite(sample)) detail::throw_non_finite(r * dir);
                    coarse_terms[j] = detail::scaled(coarse.weights[j] * r, sample);
                }
                half_rays[k / 2] = detail::pairwise_sum(std::span<const T>(coarse_terms));
            }
        }
        result.evaluations = n_theta * full.nodes.size() + half_rays.size() * coarse.nodes.size();
        result.value = detail::scaled(dtheta, detail::pairwise_sum(std::span<const T>(rays)));
        if (!half_rays.empty()) {
            const T half = detail::scaled(2.0 * dtheta, detail::pairwise_sum(std::span<const T>(half_rays)));
            result.error_estimate = detail::magnitude(detail::difference(result.value, half));
        }
        return result;
    }

    const Complex z0 = *singular_at;
    double radial_estimate = 0.0;
    for (std::size_t k = 0; k < n_theta; ++k) {
        const double phi = dtheta * double(k);
        const Complex dir = std::polar(1.0, phi);
        const double length = detail::ray_length(z0, phi);
        detail::RayResult<T> ray;
        detail::refine_panel<decltype(f), T>(f, config, z0, dir, 0.0, length, 0, ray, result.evaluations);
        rays[k] = ray.value;
        radial_estimate += ray.estimate;
        result.depth_reached = std::max(result.depth_reached, ray.depth);
        result.accuracy_warning = result.accuracy_warning || ray.warning;
    }
    result.value = detail::scaled(dtheta, detail::pairwise_sum(std::span<const T>(rays)));
    if (n_theta >= 2) {
        half_rays.reserve(n_theta / 2);
        for (std::size_t k = 0; k < n_theta; k += 2) half_rays.push_back(rays[k]);
        const T half = detail::scaled(2.0 * dtheta, detail::pairwise_sum(std::span<const T>(half_rays)));
        result.error_estimate = detail::magnitude(detail::difference(result.value, half));
    }
    result.error_estimate += dtheta * radial_estimate;
    return result;
}

}  // namespace bvpdn
