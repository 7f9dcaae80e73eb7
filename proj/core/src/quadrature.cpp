#include "bvpdn/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace bvpdn {
namespace {

GaussRule compute_gauss_legendre(int n) {
    // Newton iteration on P_n with the Tricomi initial guess, then mapped
    // from [-1, 1] to [0, 1].
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = 0.5 * (1.0 - x);
        rule.nodes[hi] = 0.5 * (1.0 + x);
        rule.weights[lo] = 0.5 * w;
        rule.weights[hi] = 0.5 * w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.5;
    return rule;
}

}  // namespace

void QuadConfig::validate() const {
    if (n_theta < 2 || n_theta % 2 != 0) {
        throw std::invalid_argument("QuadConfig: n_theta must be even and at least 2");
    }
    if (n_r < 1) throw std::invalid_argument("QuadConfig: n_r must be positive");
    if (!(adaptive_tol > 0.0)) throw std::invalid_argument("QuadConfig: adaptive_tol must be positive");
    if (max_depth < 0) throw std::invalid_argument("QuadConfig: max_depth must be non-negative");
    if (!(exclusion_radius >= 0.0)) throw std::invalid_argument("QuadConfig: exclusion_radius must be >= 0");
}

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(compute_gauss_legendre(n));
    return *slot;
}

namespace {

EmbeddedRule compute_embedded_rule(int n) {
    EmbeddedRule rule;
    rule.gauss = gauss_legendre(n);
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::size_t> subset;
    if (n <= 3) {
        subset.push_back(size / 2);
    } else {
        for (std::size_t j = 0; j < size; ++j) {
            if (std::min(j, size - 1 - j) % 2 == 0) subset.push_back(j);
        }
    }
    // Integrate each Lagrange basis polynomial of the subset with the full
    // rule, which is exact for its degree.
    const auto& x = rule.gauss.nodes;
    const auto& w = rule.gauss.weights;
    rule.companion_weights.assign(size, 0.0);
    for (const std::size_t i : subset) {
        double weight = 0.0;
        for (std::size_t j = 0; j < size; ++j) {
            double basis = 1.0;
            for (const std::size_t m : subset) {
                if (m != i) basis *= (x[j] - x[m]) / (x[i] - x[m]);
            }
            weight += w[j] * basis;
        }
        rule.companion_weights[i] = weight;
    }
    return rule;
}

}  // namespace

const EmbeddedRule& embedded_rule(int n) {
    if (n < 1) throw std::invalid_argument("embedded_rule: n must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<EmbeddedRule>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<EmbeddedRule>(compute_embedded_rule(n));
    return *slot;
}

PolarGrid PolarGrid::make(int n_r, int n_theta) {
    if (n_r < 1 || n_theta < 1) throw std::invalid_argument("PolarGrid: sizes must be positive");
    const GaussRule& rule = gauss_legendre(n_r);
    PolarGrid grid;
    grid.radii = rule.nodes;
    grid.radial_weights = rule.weights;
    grid.angles.resize(static_cast<std::size_t>(n_theta));
    for (int k = 0; k < n_theta; ++k) {
        grid.angles[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * double(k) / double(n_theta);
    }
    return grid;
}

namespace detail {

void throw_non_finite(Complex where) {
    std::ostringstream os;
    os.precision(17);
    os << "integrate_disk: non-finite integrand at zeta = (" << where.real() << ", " << where.imag() << ")";
    throw QuadratureError(os.str());
}

}  // namespace detail

}  // namespace bvpdn
