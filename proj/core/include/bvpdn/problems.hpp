#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "bvpdn/quadrature.hpp"

namespace bvpdn {

using Complex = std::complex<double>;

/// coeff * z^p * conj(z)^q
struct Monomial {
    int p = 0;
    int q = 0;
    Complex coeff{};
};

/// Finite sum of monomials z^p conj(z)^q. Terms are kept sorted by (p, q);
/// duplicate exponent pairs and degrees above the configured maximum are rejected.
class BihPolynomial {
public:
    static constexpr int kDefaultMaxDegree = 12;
    static constexpr int kHardMaxDegree = 64;

    BihPolynomial() = default;
    explicit BihPolynomial(std::vector<Monomial> terms, int max_degree = kDefaultMaxDegree);

    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    int degree() const noexcept;
    int max_degree() const noexcept { return max_degree_; }
    Complex coefficient(int p, int q) const;

    Complex operator()(Complex z) const;
    Complex dz(Complex z) const;
    Complex dzbar(Complex z) const;

private:
    template <class Weight>
    Complex sum_terms(Complex z, Weight weight, int dp, int dq) const;

    std::vector<Monomial> terms_;
    int max_degree_ = kDefaultMaxDegree;
    int max_p_ = 0;
    int max_q_ = 0;
};

Complex poly_eval(const BihPolynomial& w, Complex z);
Complex poly_dz(const BihPolynomial& w, Complex z);
Complex poly_dzbar(const BihPolynomial& w, Complex z);

/// coeff * e^{i k theta}
struct FourierTerm {
    int k = 0;
    Complex coeff{};
};

/// A function on the unit circle, held as a trigonometric polynomial.
///
/// Tabulated traces keep their samples at theta_j = 2 pi j / n and use the
/// trigonometric interpolant (Nyquist term split evenly for even n) for
/// off-node queries, harmonic extension and coefficient extraction.
class BoundaryTrace {
public:
    BoundaryTrace() = default;

    static BoundaryTrace fourier(std::vector<FourierTerm> terms);
    static BoundaryTrace tabulated(std::vector<Complex> samples);

    Complex operator()(double theta) const;
    /// Coefficients sorted by frequency, merged, zero terms dropped.
    const std::vector<FourierTerm>& coefficients() const noexcept { return coeffs_; }
    Complex coefficient(int k) const;
    bool is_tabulated() const noexcept { return !samples_.empty(); }
    const std::vector<Complex>& samples() const noexcept { return samples_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int max_frequency() const noexcept;

    /// (1/2pi) int_0^{2pi} trace dt
    Complex mean() const { return coefficient(0); }

    /// Harmonic extension sum_{k>=0} c_k z^k + sum_{k>0} c_{-k} conj(z)^k and its
    /// Wirtinger derivatives; exact for the stored trigonometric polynomial.
    Complex extension(Complex z) const;
    Complex extension_dz(Complex z) const;
    Complex extension_dzbar(Complex z) const;

    /// max |trace| over the stored samples and n equispaced angles.
    double sup_norm(int n = 4096) const;

private:
    std::vector<FourierTerm> coeffs_;
    std::vector<Complex> samples_;
};

/// Source samples on a polar grid: radii r_i = i/(n_r - 1) (centre and rim
/// included), angles theta_j = 2 pi j / n_theta, row-major by radius.
/// Off-grid values use local cubic Lagrange interpolation in r and periodic
/// cubic Lagrange interpolation in theta.
class TabulatedSource {
public:
    TabulatedSource(int n_r, int n_theta, std::vector<Complex> values);

    int n_r() const noexcept { return n_r_; }
    int n_theta() const noexcept { return n_theta_; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    Complex operator()(Complex zeta) const;
    double sup_norm() const;
    bool is_zero() const;

private:
    Complex at(int i, int j) const;

    int n_r_;
    int n_theta_;
    std::vector<Complex> values_;
};

/// The source g, either a polynomial (manufactured problems) or tabulated.
class Source {
public:
    Source() = default;
    Source(BihPolynomial poly) : data_(std::move(poly)) {}
    Source(TabulatedSource table) : data_(std::move(table)) {}

    Complex operator()(Complex zeta) const;
    bool is_zero() const;
    bool is_tabulated() const noexcept { return std::holds_alternative<TabulatedSource>(data_); }
    const BihPolynomial* polynomial() const noexcept { return std::get_if<BihPolynomial>(&data_); }
    const TabulatedSource* table() const noexcept { return std::get_if<TabulatedSource>(&data_); }

    /// Sup of |g| sampled on a polar grid with radii i/(n_r-1) and n_theta angles.
    double sup_norm(int n_r = 256, int n_theta = 256) const;

private:
    std::variant<BihPolynomial, TabulatedSource> data_;
};

enum class Provenance { manufactured, tabulated };

std::string_view to_string(Provenance p);

/// Boundary data gamma0 (Dirichlet trace), gamma (normal derivative of
/// w_{z zbar}), source g and the normalisation constant c.
struct ProblemData {
    BoundaryTrace gamma0;
    BoundaryTrace gamma;
    Source g;
    Complex c{};
    Provenance provenance = Provenance::tabulated;
    /// The exact solution when provenance is manufactured.
    std::optional<BihPolynomial> exact;
};

/// g = (d_z d_zbar)^2 w: pq(p-1)(q-1) c at (p-2, q-2).
BihPolynomial derive_source(const BihPolynomial& w);
/// w restricted to the circle: frequency p - q.
BoundaryTrace derive_gamma0(const BihPolynomial& w);
/// Radial derivative of w_{z zbar} on the circle: pq(p+q-2) c at frequency p - q.
BoundaryTrace derive_gamma(const BihPolynomial& w);
/// Mean of w_{z zbar} over the circle: sum_p p^2 c_{p,p}.
Complex derive_c(const BihPolynomial& w);

/// All problem data derived from an exact polynomial solution.
ProblemData manufacture(const BihPolynomial& w);

/// |(1/2pi) int gamma dt - (2/pi) int_D g dx dy| with the unnormalized area
/// measure, the reading under which the compatibility condition agrees with
/// Green's identity.
double compatibility_residual(const ProblemData& problem, const QuadConfig& config = {});

}  // namespace bvpdn
