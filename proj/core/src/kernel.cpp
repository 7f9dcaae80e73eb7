#include "bvpdn/kernel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bvpdn {
namespace {

// Points produced as e^{it} can land a few ulps outside the unit circle.
constexpr double kRadiusSlack = 1e-12;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* what) {
    if (!finite(z)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

// Running sum of coeff(n) u^n for n = first..max_terms added to `sum`, stopping
// once |term| <= term_tol |sum|. Terms are added in order; the powers are
// advanced in two interleaved chains (odd/even offsets, step u^2) to shorten
// the multiply dependency, and moduli are compared squared to avoid hypot.
template <class Coeff>
Complex sum_series(Complex u, Complex sum, int first, Coeff coeff, const SeriesPolicy& policy) {
    const double tol2 = policy.term_tol * policy.term_tol;
    const Complex u2 = u * u;
    Complex p0 = u;
    for (int n = 1; n < first; ++n) p0 *= u;
    Complex p1 = p0 * u;
    for (int n = first; n <= policy.max_terms; n += 2) {
        const Complex t0 = coeff(n) * p0;
        sum += t0;
        if (std::norm(t0) <= tol2 * std::norm(sum) || n + 1 > policy.max_terms) break;
        const Complex t1 = coeff(n + 1) * p1;
        sum += t1;
        if (std::norm(t1) <= tol2 * std::norm(sum)) break;
        p0 *= u2;
        p1 *= u2;
    }
    return sum;
}

// Series coefficients, tabulated so the summation loops carry no divisions.
struct SeriesTables {
    static constexpr int kSize = 256;
    std::array<double, kSize + 1> a{};  // 1 / (n (n+1))
    std::array<double, kSize + 1> b{};  // -1 / (m + 2)
    std::array<double, kSize + 1> c{};  // 2 / (n (n+2))

    SeriesTables() {
        for (int n = 1; n <= kSize; ++n) {
            a[n] = 1.0 / (double(n) * double(n + 1));
            b[n] = -1.0 / double(n + 2);
            c[n] = 2.0 / (double(n) * double(n + 2));
        }
    }
};

const SeriesTables& tables() {
    static const SeriesTables t;
    return t;
}

double lookup(const std::array<double, SeriesTables::kSize + 1>& table, int n, double fallback) {
    return n <= SeriesTables::kSize ? table[static_cast<std::size_t>(n)] : fallback;
}

Complex series_a(Complex u, const SeriesPolicy& policy) {
    // -1 + sum_{n>=1} u^n / (n (n+1))
    const auto& t = tables().a;
    return sum_series(u, {-1.0, 0.0}, 1,
                      [&](int n) { return lookup(t, n, 1.0 / (double(n) * double(n + 1))); }, policy);
}

Complex series_b(Complex u, const SeriesPolicy& policy) {
    // -sum_{m>=0} u^m / (m + 2)
    const auto& t = tables().b;
    return sum_series(u, {-0.5, 0.0}, 1, [&](int m) { return lookup(t, m, -1.0 / double(m + 2)); }, policy);
}

Complex series_c(Complex u, const SeriesPolicy& policy) {
    // -3/2 + 2 sum_{n>=1} u^n / (n (n+2))
    const auto& t = tables().c;
    return sum_series(u, {-1.5, 0.0}, 1,
                      [&](int n) { return lookup(t, n, 2.0 / (double(n) * double(n + 2))); }, policy);
}

bool use_series(Complex u, const SeriesPolicy& policy) {
    return std::norm(u) < policy.switch_radius * policy.switch_radius;
}

// log(1-u), A(u) and B(u) together. Inside the switch radius only the B
// series is summed: log(1-u) = u (u B - 1) and A = (1-u)(u B - 1) follow
// from the definition of B without cancellation.
void families_lab(Complex u, const SeriesPolicy& policy, Complex& l, Complex& a, Complex& b) {
    if (use_series(u, policy)) {
        b = series_b(u, policy);
        const Complex ub1 = u * b - 1.0;
        l = u * ub1;
        a = (1.0 - u) * ub1;
        return;
    }
    l = detail::log1m(u);
    const Complex inv = 1.0 / u;
    a = (1.0 - u) * inv * l;
    b = (l * inv + 1.0) * inv;
}

}  // namespace

void SeriesPolicy::validate() const {
    if (!(switch_radius > 0.0 && switch_radius < 1.0)) {
        throw std::invalid_argument("SeriesPolicy: switch_radius must lie in (0, 1)");
    }
    if (max_terms < 1) {
        throw std::invalid_argument("SeriesPolicy: max_terms must be positive");
    }
    if (!(term_tol > 0.0)) {
        throw std::invalid_argument("SeriesPolicy: term_tol must be positive");
    }
}

namespace detail {

Complex log1m(Complex u) {
    // log(1 + v) with v = -u: real part via log1p(2 Re v + |v|^2).
    const double vr = -u.real();
    const double vi = -u.imag();
    const double re = 0.5 * std::log1p(2.0 * vr + vr * vr + vi * vi);
    const double im = std::atan2(vi, 1.0 + vr);
    return {re, im};
}

Complex h2_complex(Complex z, Complex zeta, const SeriesPolicy& policy) {
    const Complex d = zeta - z;
    const double s = std::norm(d);
    const Complex zeta_bar = std::conj(zeta);
    const Complex u = z * zeta_bar;
    const Complex v = std::conj(u);

    const Complex a_u = stable_log_family(u, LogFamily::A, policy);
    const Complex a_v = stable_log_family(v, LogFamily::A, policy);

    const Complex t1 = s > 0.0 ? Complex(-s * std::log(s), 0.0) : Complex{};
    const Complex t2 = -(1.0 - std::norm(z)) * (4.0 + a_u + a_v);
    // (zeta - z)(1 - u)/z log(1-u) == (zeta - z) conj(zeta) A(u), no division by z.
    const Complex t3 = -d * zeta_bar * a_u;
    const Complex t4 = -std::conj(d) * zeta * a_v;
    return t1 + t2 + t3 + t4;
}

double h2_unchecked(Complex z, Complex zeta, const SeriesPolicy& policy) {
    const Complex d = zeta - z;
    const double s = std::norm(d);
    const Complex zeta_bar = std::conj(zeta);
    const Complex u = z * zeta_bar;

    Complex l;
    Complex a;
    Complex b;
    families_lab(u, policy, l, a, b);
    const double t1 = s > 0.0 ? -s * std::log(s) : 0.0;
    const double t2 = -(1.0 - std::norm(z)) * (4.0 + 2.0 * a.real());
    const double t34 = -2.0 * (d * zeta_bar * a).real();
    return t1 + t2 + t34;
}

KernelSample h2_with_dz_unchecked(Complex z, Complex zeta, const SeriesPolicy& policy) {
    const Complex d = zeta - z;
    const double s = std::norm(d);
    const double log_s = std::log(s);
    const Complex zeta_bar = std::conj(zeta);
    const Complex u = z * zeta_bar;
    Complex l;
    Complex a;
    Complex b;
    families_lab(u, policy, l, a, b);

    const double one_minus = 1.0 - std::norm(z);
    const double bracket = 4.0 + 2.0 * a.real();

    KernelSample out;
    out.value = -s * log_s - one_minus * bracket - 2.0 * (d * zeta_bar * a).real();

    const Complex k5 = std::conj(d) * (log_s + 1.0);
    const Complex k6 = std::conj(z) * bracket;
    const Complex k7 = one_minus * zeta_bar * b;
    const Complex k8 = zeta_bar * (std::norm(zeta) * b - l - 1.0);
    out.dz = k5 + k6 + k7 + k8;
    return out;
}

}  // namespace detail

double poisson(Complex z, double t) {
    require_finite(z, "z");
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
    if (std::abs(z) >= 1.0) throw std::domain_error("poisson: requires |z| < 1");
    const Complex e = std::polar(1.0, -t);
    return (1.0 - std::norm(z)) / std::norm(1.0 - z * e);
}

Complex poisson_dz(Complex z, double t) {
    require_finite(z, "z");
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
    if (std::abs(z) >= 1.0) throw std::domain_error("poisson_dz: requires |z| < 1");
    const Complex e = std::polar(1.0, -t);
    const Complex a = 1.0 - z * e;
    return (-std::conj(z) * a + (1.0 - std::norm(z)) * e) / (a * a * std::conj(a));
}

Complex stable_log_family(Complex u, LogFamily which, const SeriesPolicy& policy) {
    require_finite(u, "u");
    if (std::norm(u) >= 1.0) throw std::domain_error("stable_log_family: requires |u| < 1");
    if (use_series(u, policy)) {
        switch (which) {
            case LogFamily::A: return series_a(u, policy);
            case LogFamily::B: return series_b(u, policy);
            case LogFamily::C: return series_c(u, policy);
        }
    }
    const Complex l = detail::log1m(u);
    const Complex inv = 1.0 / u;
    switch (which) {
        case LogFamily::A: return (1.0 - u) * inv * l;
        case LogFamily::B: return l * inv * inv + inv;
        case LogFamily::C: return (1.0 - u * u) * inv * inv * l + inv - 1.0;
    }
    return {};
}

double h2(Complex z, Complex zeta, const SeriesPolicy& policy) {
    require_finite(z, "z");
    require_finite(zeta, "zeta");
    if (std::abs(z) > 1.0 + kRadiusSlack || std::abs(zeta) > 1.0 + kRadiusSlack) {
        throw std::domain_error("h2: arguments must lie in the closed unit disk");
    }
    if (std::abs(z * std::conj(zeta)) >= 1.0) {
        throw std::domain_error("h2: z and zeta may not both lie on the unit circle");
    }
    return detail::h2_complex(z, zeta, policy).real();
}

Complex h2_dz(Complex z, Complex zeta, const SeriesPolicy& policy) {
    require_finite(z, "z");
    require_finite(zeta, "zeta");
    if (std::abs(z) >= 1.0) throw std::domain_error("h2_dz: requires |z| < 1");
    if (std::abs(zeta) > 1.0 + kRadiusSlack) throw std::domain_error("h2_dz: requires |zeta| <= 1");
    if (zeta == z) throw std::domain_error("h2_dz: undefined on the diagonal zeta == z");
    return detail::h2_with_dz_unchecked(z, zeta, policy).dz;
}

KernelSample h2_with_dz(Complex z, Complex zeta, const SeriesPolicy& policy) {
    require_finite(z, "z");
    require_finite(zeta, "zeta");
    if (std::abs(z) >= 1.0) throw std::domain_error("h2_with_dz: requires |z| < 1");
    if (std::abs(zeta) > 1.0 + kRadiusSlack) throw std::domain_error("h2_with_dz: requires |zeta| <= 1");
    if (zeta == z) throw std::domain_error("h2_with_dz: undefined on the diagonal zeta == z");
    return detail::h2_with_dz_unchecked(z, zeta, policy);
}

}  // namespace bvpdn
