#include "bvpdn/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bvpdn {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Lagrange weights for nodes 0..m-1 (unit spacing) evaluated at x.
void lagrange_weights(int m, double x, std::array<double, 4>& w) {
    for (int a = 0; a < m; ++a) {
        double num = 1.0;
        double den = 1.0;
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            num *= x - b;
            den *= a - b;
        }
        w[static_cast<std::size_t>(a)] = num / den;
    }
}

}  // namespace

// ---------------------------------------------------------------- BihPolynomial

BihPolynomial::BihPolynomial(std::vector<Monomial> terms, int max_degree)
    : terms_(std::move(terms)), max_degree_(max_degree) {
    if (max_degree_ < 0 || max_degree_ > kHardMaxDegree) {
        throw std::invalid_argument("BihPolynomial: max_degree must lie in [0, " +
                                    std::to_string(kHardMaxDegree) + "]");
    }
    for (const Monomial& m : terms_) {
        if (m.p < 0 || m.q < 0) throw std::invalid_argument("BihPolynomial: exponents must be non-negative");
        if (m.p + m.q > max_degree_) {
            throw std::invalid_argument("BihPolynomial: term z^" + std::to_string(m.p) + " zbar^" +
                                        std::to_string(m.q) + " exceeds max degree " +
                                        std::to_string(max_degree_));
        }
        if (!finite(m.coeff)) throw std::invalid_argument("BihPolynomial: coefficients must be finite");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.p != b.p ? a.p < b.p : a.q < b.q; });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].p == terms_[i - 1].p && terms_[i].q == terms_[i - 1].q) {
            throw std::invalid_argument("BihPolynomial: duplicate term (" + std::to_string(terms_[i].p) + ", " +
                                        std::to_string(terms_[i].q) + ")");
        }
    }
    for (const Monomial& m : terms_) {
        max_p_ = std::max(max_p_, m.p);
        max_q_ = std::max(max_q_, m.q);
    }
}

int BihPolynomial::degree() const noexcept {
    int d = 0;
    for (const Monomial& m : terms_) d = std::max(d, m.p + m.q);
    return d;
}

Complex BihPolynomial::coefficient(int p, int q) const {
    for (const Monomial& m : terms_) {
        if (m.p == p && m.q == q) return m.coeff;
    }
    return {};
}

template <class Weight>
Complex BihPolynomial::sum_terms(Complex z, Weight weight, int dp, int dq) const {
    // Plain double storage: std::complex arrays would be zero-filled on every call.
    double zp_re[kHardMaxDegree + 1];
    double zp_im[kHardMaxDegree + 1];
    double zq_re[kHardMaxDegree + 1];
    double zq_im[kHardMaxDegree + 1];
    zp_re[0] = zq_re[0] = 1.0;
    zp_im[0] = zq_im[0] = 0.0;
    const double x = z.real();
    const double y = z.imag();
    for (int i = 1; i <= max_p_; ++i) {
        zp_re[i] = zp_re[i - 1] * x - zp_im[i - 1] * y;
        zp_im[i] = zp_re[i - 1] * y + zp_im[i - 1] * x;
    }
    for (int i = 1; i <= max_q_; ++i) {
        zq_re[i] = zq_re[i - 1] * x + zq_im[i - 1] * y;
        zq_im[i] = zq_im[i - 1] * x - zq_re[i - 1] * y;
    }
    Complex sum{};
    for (const Monomial& m : terms_) {
        if (m.p < dp || m.q < dq) continue;
        const int i = m.p - dp;
        const int j = m.q - dq;
        const double re = zp_re[i] * zq_re[j] - zp_im[i] * zq_im[j];
        const double im = zp_re[i] * zq_im[j] + zp_im[i] * zq_re[j];
        sum += weight(m) * m.coeff * Complex(re, im);
    }
    return sum;
}

Complex BihPolynomial::operator()(Complex z) const {
    return sum_terms(z, [](const Monomial&) { return 1.0; }, 0, 0);
}

Complex BihPolynomial::dz(Complex z) const {
    return sum_terms(z, [](const Monomial& m) { return double(m.p); }, 1, 0);
}

Complex BihPolynomial::dzbar(Complex z) const {
    return sum_terms(z, [](const Monomial& m) { return double(m.q); }, 0, 1);
}

Complex poly_eval(const BihPolynomial& w, Complex z) { return w(z); }
Complex poly_dz(const BihPolynomial& w, Complex z) { return w.dz(z); }
Complex poly_dzbar(const BihPolynomial& w, Complex z) { return w.dzbar(z); }

// ---------------------------------------------------------------- BoundaryTrace

BoundaryTrace BoundaryTrace::fourier(std::vector<FourierTerm> terms) {
    std::map<int, Complex> merged;
    for (const FourierTerm& t : terms) {
        if (!finite(t.coeff)) throw std::invalid_argument("BoundaryTrace: coefficients must be finite");
        merged[t.k] += t.coeff;
    }
    BoundaryTrace trace;
    for (const auto& [k, c] : merged) {
        if (c != Complex{}) trace.coeffs_.push_back({k, c});
    }
    return trace;
}

BoundaryTrace BoundaryTrace::tabulated(std::vector<Complex> samples) {
    if (samples.empty()) throw std::invalid_argument("BoundaryTrace: tabulated trace needs samples");
    for (const Complex& s : samples) {
        if (!finite(s)) throw std::invalid_argument("BoundaryTrace: samples must be finite");
    }
    const auto n = static_cast<long>(samples.size());
    std::vector<Complex> twiddle(static_cast<std::size_t>(n));
    for (long m = 0; m < n; ++m) {
        twiddle[static_cast<std::size_t>(m)] = std::polar(1.0, -2.0 * std::numbers::pi * double(m) / double(n));
    }
    auto dft = [&](long k) {
        const long kk = ((k % n) + n) % n;
        Complex sum{};
        for (long j = 0; j < n; ++j) {
            sum += samples[static_cast<std::size_t>(j)] * twiddle[static_cast<std::size_t>((j * kk) % n)];
        }
        return sum / double(n);
    };

    std::vector<FourierTerm> terms;
    if (n % 2 == 0) {
        const long half = n / 2;
        const Complex nyquist = dft(half);
        terms.push_back({static_cast<int>(-half), 0.5 * nyquist});
        for (long k = -half + 1; k < half; ++k) terms.push_back({static_cast<int>(k), dft(k)});
        terms.push_back({static_cast<int>(half), 0.5 * nyquist});
    } else {
        const long half = (n - 1) / 2;
        for (long k = -half; k <= half; ++k) terms.push_back({static_cast<int>(k), dft(k)});
    }
    BoundaryTrace trace = fourier(std::move(terms));
    trace.samples_ = std::move(samples);
    return trace;
}

Complex BoundaryTrace::coefficient(int k) const {
    const auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), k,
                                     [](const FourierTerm& t, int key) { return t.k < key; });
    return it != coeffs_.end() && it->k == k ? it->coeff : Complex{};
}

int BoundaryTrace::max_frequency() const noexcept {
    int m = 0;
    for (const FourierTerm& t : coeffs_) m = std::max(m, std::abs(t.k));
    return m;
}

Complex BoundaryTrace::operator()(double theta) const {
    if (coeffs_.empty()) return {};
    const int lo = coeffs_.front().k;
    const int hi = coeffs_.back().k;
    Complex sum{};
    if (static_cast<std::size_t>(hi - lo + 1) <= 2 * coeffs_.size()) {
        // Dense spectrum: step e^{i k theta} by repeated multiplication.
        const Complex step = std::polar(1.0, theta);
        Complex phase = std::polar(1.0, double(lo) * theta);
        std::size_t idx = 0;
        for (int k = lo; k <= hi; ++k) {
            if (coeffs_[idx].k == k) {
                sum += coeffs_[idx].coeff * phase;
                ++idx;
            }
            phase *= step;
        }
        return sum;
    }
    for (const FourierTerm& t : coeffs_) sum += t.coeff * std::polar(1.0, double(t.k) * theta);
    return sum;
}

Complex BoundaryTrace::extension(Complex z) const {
    Complex sum{};
    for (const FourierTerm& t : coeffs_) {
        sum += t.k >= 0 ? t.coeff * std::pow(z, t.k) : t.coeff * std::pow(std::conj(z), -t.k);
    }
    return sum;
}

Complex BoundaryTrace::extension_dz(Complex z) const {
    Complex sum{};
    for (const FourierTerm& t : coeffs_) {
        if (t.k > 0) sum += double(t.k) * t.coeff * std::pow(z, t.k - 1);
    }
    return sum;
}

Complex BoundaryTrace::extension_dzbar(Complex z) const {
    Complex sum{};
    for (const FourierTerm& t : coeffs_) {
        if (t.k < 0) sum += double(-t.k) * t.coeff * std::pow(std::conj(z), -t.k - 1);
    }
    return sum;
}

double BoundaryTrace::sup_norm(int n) const {
    double m = 0.0;
    for (const Complex& s : samples_) m = std::max(m, std::abs(s));
    for (int j = 0; j < n; ++j) {
        m = std::max(m, std::abs((*this)(2.0 * std::numbers::pi * double(j) / double(n))));
    }
    return m;
}

// ---------------------------------------------------------------- TabulatedSource

TabulatedSource::TabulatedSource(int n_r, int n_theta, std::vector<Complex> values)
    : n_r_(n_r), n_theta_(n_theta), values_(std::move(values)) {
    if (n_r_ < 2 || n_theta_ < 1) {
        throw std::invalid_argument("TabulatedSource: need n_r >= 2 and n_theta >= 1");
    }
    if (values_.size() != static_cast<std::size_t>(n_r_) * static_cast<std::size_t>(n_theta_)) {
        throw std::invalid_argument("TabulatedSource: expected n_r * n_theta values, got " +
                                    std::to_string(values_.size()));
    }
    for (const Complex& v : values_) {
        if (!finite(v)) throw std::invalid_argument("TabulatedSource: values must be finite");
    }
}

Complex TabulatedSource::at(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_theta_) + static_cast<std::size_t>(j)];
}

Complex TabulatedSource::operator()(Complex zeta) const {
    const double r = std::min(1.0, std::abs(zeta));
    double theta = std::arg(zeta);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;

    const int mr = std::min(4, n_r_);
    const double x = r * double(n_r_ - 1);
    const int ir = std::clamp(static_cast<int>(std::floor(x)) - (mr - 1) / 2, 0, n_r_ - mr);
    std::array<double, 4> wr{};
    lagrange_weights(mr, x - ir, wr);

    const int mt = std::min(4, n_theta_);
    const double y = theta * double(n_theta_) / (2.0 * std::numbers::pi);
    const int jt = static_cast<int>(std::floor(y)) - (mt - 1) / 2;
    std::array<double, 4> wt{};
    lagrange_weights(mt, y - jt, wt);

    Complex sum{};
    for (int a = 0; a < mr; ++a) {
        Complex row{};
        for (int b = 0; b < mt; ++b) {
            const int j = ((jt + b) % n_theta_ + n_theta_) % n_theta_;
            row += wt[static_cast<std::size_t>(b)] * at(ir + a, j);
        }
        sum += wr[static_cast<std::size_t>(a)] * row;
    }
    return sum;
}

double TabulatedSource::sup_norm() const {
    double m = 0.0;
    for (const Complex& v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool TabulatedSource::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Complex& v) { return v == Complex{}; });
}

// ---------------------------------------------------------------- Source

Complex Source::operator()(Complex zeta) const {
    return std::visit([&](const auto& s) -> Complex { return s(zeta); }, data_);
}

bool Source::is_zero() const {
    if (const auto* poly = polynomial()) {
        return std::all_of(poly->terms().begin(), poly->terms().end(),
                           [](const Monomial& m) { return m.coeff == Complex{}; });
    }
    return table()->is_zero();
}

double Source::sup_norm(int n_r, int n_theta) const {
    if (const auto* t = table()) return t->sup_norm();
    if (is_zero()) return 0.0;
    double m = 0.0;
    for (int i = 0; i < n_r; ++i) {
        const double r = n_r > 1 ? double(i) / double(n_r - 1) : 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const double t = 2.0 * std::numbers::pi * double(j) / double(n_theta);
            m = std::max(m, std::abs((*this)(std::polar(r, t))));
        }
    }
    return m;
}

std::string_view to_string(Provenance p) {
    return p == Provenance::manufactured ? "manufactured" : "tabulated";
}

// ---------------------------------------------------------------- derivations

BihPolynomial derive_source(const BihPolynomial& w) {
    std::vector<Monomial> out;
    for (const Monomial& m : w.terms()) {
        if (m.p < 2 || m.q < 2) continue;
        const double factor = double(m.p) * m.q * (m.p - 1) * (m.q - 1);
        out.push_back({m.p - 2, m.q - 2, factor * m.coeff});
    }
    return BihPolynomial(std::move(out), w.max_degree());
}

BoundaryTrace derive_gamma0(const BihPolynomial& w) {
    std::vector<FourierTerm> terms;
    for (const Monomial& m : w.terms()) terms.push_back({m.p - m.q, m.coeff});
    return BoundaryTrace::fourier(std::move(terms));
}

BoundaryTrace derive_gamma(const BihPolynomial& w) {
    std::vector<FourierTerm> terms;
    for (const Monomial& m : w.terms()) {
        const double factor = double(m.p) * m.q * (m.p + m.q - 2);
        terms.push_back({m.p - m.q, factor * m.coeff});
    }
    return BoundaryTrace::fourier(std::move(terms));
}

Complex derive_c(const BihPolynomial& w) {
    Complex c{};
    for (const Monomial& m : w.terms()) {
        if (m.p == m.q) c += double(m.p) * m.p * m.coeff;
    }
    return c;
}

ProblemData manufacture(const BihPolynomial& w) {
    ProblemData data;
    data.gamma0 = derive_gamma0(w);
    data.gamma = derive_gamma(w);
    data.g = Source(derive_source(w));
    data.c = derive_c(w);
    data.provenance = Provenance::manufactured;
    data.exact = w;
    return data;
}

double compatibility_residual(const ProblemData& problem, const QuadConfig& config) {
    const Complex boundary_mean = problem.gamma.mean();
    Complex area{};
    if (!problem.g.is_zero()) {
        area = integrate_disk([&](Complex zeta) { return problem.g(zeta); }, config).value;
    }
    return std::abs(boundary_mean - (2.0 / std::numbers::pi) * area);
}

}  // namespace bvpdn
