#include "secradii/series.hpp"

#include <cmath>
#include <utility>

namespace secradii {

namespace {

constexpr double kSingularTol = 1e-12;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_in_disk(Complex z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("eval: |z| must be < 1");
}

}  // namespace

ComplexSeries::ComplexSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ComplexSeries: needs at least one coefficient");
    for (const Complex& c : coeffs_) {
        if (!finite(c)) throw std::invalid_argument("ComplexSeries: coefficients must be finite");
    }
}

ComplexSeries ComplexSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("ComplexSeries::zero: order must be >= 0");
    return ComplexSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

ComplexSeries ComplexSeries::constant(Complex c0, int order) {
    if (order < 0) throw std::invalid_argument("ComplexSeries::constant: order must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = c0;
    return ComplexSeries(std::move(c));
}

NormalizedSeries::NormalizedSeries(std::vector<Complex> coeffs) : ComplexSeries(std::move(coeffs)) {
    if (order() < 1) throw std::invalid_argument("NormalizedSeries: order must be >= 1");
    if (coeff(0) != Complex(0.0, 0.0) || coeff(1) != Complex(1.0, 0.0))
        throw std::invalid_argument("NormalizedSeries: requires c0 = 0 and c1 = 1 exactly");
}

NormalizedSeries::NormalizedSeries(ComplexSeries s) : NormalizedSeries(std::vector<Complex>(s.coeffs())) {}

Complex eval(const ComplexSeries& s, Complex z) {
    require_in_disk(z);
    const auto& c = s.coeffs();
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

ComplexSeries differentiate(const ComplexSeries& s) {
    if (s.order() < 1) throw std::invalid_argument("differentiate: order must be >= 1");
    std::vector<Complex> d(static_cast<std::size_t>(s.order()));
    for (int k = 1; k <= s.order(); ++k) d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
    return ComplexSeries(std::move(d));
}

NormalizedSeries integrate_normalized(const ComplexSeries& d) {
    if (d.coeff(0) != Complex(1.0, 0.0))
        throw std::invalid_argument("integrate_normalized: constant term must be exactly 1");
    std::vector<Complex> a(static_cast<std::size_t>(d.order()) + 2);
    a[0] = 0.0;
    for (int k = 1; k <= d.order() + 1; ++k)
        a[static_cast<std::size_t>(k)] = d.coeff(k - 1) / static_cast<double>(k);
    return NormalizedSeries(std::move(a));
}

ComplexSeries multiply(const ComplexSeries& s, const ComplexSeries& t, int order) {
    if (order < 0) throw std::invalid_argument("multiply: order must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        Complex acc{0.0, 0.0};
        const int jLo = std::max(0, m - t.order());
        const int jHi = std::min(m, s.order());
        for (int j = jLo; j <= jHi; ++j) acc += s.coeff(j) * t.coeff(m - j);
        c[static_cast<std::size_t>(m)] = acc;
    }
    return ComplexSeries(std::move(c));
}

ComplexSeries reciprocal_z_over_f(const NormalizedSeries& f, int order) {
    if (order < 0) throw std::invalid_argument("reciprocal_z_over_f: order must be >= 0");
    // A_j = a_{j+1} are the coefficients of f/z, with A_0 = 1.
    std::vector<Complex> b(static_cast<std::size_t>(order) + 1);
    b[0] = 1.0;
    for (int m = 1; m <= order; ++m) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < m; ++k) acc += b[static_cast<std::size_t>(k)] * f.coeff(m - k + 1);
        b[static_cast<std::size_t>(m)] = -acc;
    }
    return ComplexSeries(std::move(b));
}

ComplexSeries exponential(const ComplexSeries& s, int order) {
    if (order < 0) throw std::invalid_argument("exponential: order must be >= 0");
    if (s.coeff(0) != Complex(0.0, 0.0))
        throw std::invalid_argument("exponential: constant term must be exactly 0");
    std::vector<Complex> e(static_cast<std::size_t>(order) + 1);
    e[0] = 1.0;
    for (int m = 1; m <= order; ++m) {
        Complex acc{0.0, 0.0};
        const int jHi = std::min(m, s.order());
        for (int j = 1; j <= jHi; ++j)
            acc += static_cast<double>(j) * s.coeff(j) * e[static_cast<std::size_t>(m - j)];
        e[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
    }
    return ComplexSeries(std::move(e));
}

ComplexSeries binomial_power(double gamma, int m, int order) {
    if (m < 1) throw std::invalid_argument("binomial_power: m must be >= 1");
    if (order < 0) throw std::invalid_argument("binomial_power: order must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    double term = 1.0;  // (-1)^j binom(gamma, j)
    for (int j = 0; j * m <= order; ++j) {
        c[static_cast<std::size_t>(j) * static_cast<std::size_t>(m)] = term;
        term *= -(gamma - j) / (j + 1.0);
    }
    return ComplexSeries(std::move(c));
}

NormalizedSeries section(const NormalizedSeries& f, int n) {
    if (n < 2) throw std::invalid_argument("section: n must be >= 2");
    if (n > f.order()) throw std::invalid_argument("section: n exceeds the truncation degree");
    std::vector<Complex> c(f.coeffs());
    for (std::size_t k = static_cast<std::size_t>(n) + 1; k < c.size(); ++k) c[k] = 0.0;
    return NormalizedSeries(std::move(c));
}

Complex tail_eval(const NormalizedSeries& f, int n, Complex z) {
    if (n < 2) throw std::invalid_argument("tail_eval: n must be >= 2");
    require_in_disk(z);
    if (n >= f.order()) return {0.0, 0.0};
    // Horner on the coefficients a_{n+1}..a_N, then scale by z^{n+1}.
    const auto& c = f.coeffs();
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > static_cast<std::size_t>(n) + 1;) acc = acc * z + c[k];
    Complex zp{1.0, 0.0};
    for (int k = 0; k < n + 1; ++k) zp *= z;
    return acc * zp;
}

Complex log_derivative_at(const NormalizedSeries& f, Complex z) {
    require_in_disk(z);
    const ComplexSeries fp = differentiate(f);
    const ComplexSeries fpp = differentiate(fp);
    const Complex d = eval(fp, z);
    if (std::abs(d) <= kSingularTol)
        throw SingularPointError("log_derivative_at: f'(z) numerically vanishes", z);
    return 1.0 + z * eval(fpp, z) / d;
}

Complex star_quotient_at(const NormalizedSeries& f, Complex z) {
    require_in_disk(z);
    if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
    const Complex fz = eval(f, z);
    if (std::abs(fz) <= kSingularTol)
        throw SingularPointError("star_quotient_at: f(z) numerically vanishes", z);
    return z * eval(differentiate(f), z) / fz;
}

}  // namespace secradii
