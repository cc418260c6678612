#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace secradii {

using Complex = std::complex<double>;

/// Default truncation degree. Tail terms of the series handled here decay
/// geometrically on |z| <= 0.99 * (radius of interest), so degree 64 keeps
/// truncation residuals far below every test tolerance in this project.
inline constexpr int kDefaultOrder = 64;

/// Thrown by point evaluators when a denominator is numerically zero
/// (|value| <= 1e-12). Carries the offending point.
class SingularPointError : public std::runtime_error {
public:
    SingularPointError(const std::string& what, Complex point)
        : std::runtime_error(what), point_(point) {}
    Complex point() const noexcept { return point_; }

private:
    Complex point_;
};

/// Truncated power series sum_{k=0}^{N} c_k z^k with complex coefficients.
/// Immutable after construction; all entries finite. Degenerate order-0
/// (constant) series are allowed so differentiation can lower the degree.
class ComplexSeries {
public:
    explicit ComplexSeries(std::vector<Complex> coeffs);

    static ComplexSeries zero(int order);
    static ComplexSeries constant(Complex c0, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero beyond the truncation degree.
    Complex coeff(int k) const {
        if (k < 0 || k > order()) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<Complex> coeffs_;
};

/// A ComplexSeries with c_0 = 0 and c_1 = 1 exactly (f(0)=0, f'(0)=1).
class NormalizedSeries : public ComplexSeries {
public:
    explicit NormalizedSeries(std::vector<Complex> coeffs);
    explicit NormalizedSeries(ComplexSeries s);
};

/// Horner evaluation of s at z. Requires |z| < 1; the truncation bounds used
/// throughout this library are only meaningful inside the open unit disk.
Complex eval(const ComplexSeries& s, Complex z);

/// Termwise derivative; order drops by one.
ComplexSeries differentiate(const ComplexSeries& s);

/// Termwise antiderivative of d with constant term 0. Requires d.c0 == 1 so
/// the result is normalized (a_1 = 1); order rises by one.
NormalizedSeries integrate_normalized(const ComplexSeries& d);

/// Cauchy product of s and t truncated to the given degree.
ComplexSeries multiply(const ComplexSeries& s, const ComplexSeries& t, int order);

/// Coefficients b_0=1, b_1, ..., b_N of z/f solving
///   b_m = -a_{m+1} - sum_{k=1}^{m-1} b_k a_{m-k+1},
/// so that (f/z) * (z/f) == 1 through the requested degree.
ComplexSeries reciprocal_z_over_f(const NormalizedSeries& f, int order);

/// exp of a series with zero constant term, via the recurrence
/// e_0 = 1, m e_m = sum_{j=1}^{m} j c_j e_{m-j}.
ComplexSeries exponential(const ComplexSeries& s, int order);

/// Coefficients of (1 - z^m)^gamma for real gamma: term j is
/// (-1)^j binom(gamma, j) at degree j*m, by the ratio recurrence.
ComplexSeries binomial_power(double gamma, int m, int order);

/// n-th section z + sum_{k=2}^{n} a_k z^k, zero-padded to f's order.
/// Requires 2 <= n <= f.order().
NormalizedSeries section(const NormalizedSeries& f, int n);

/// Tail sum_{k=n+1}^{order} a_k z^k, i.e. eval(f,z) - eval(section(f,n),z).
/// n past the truncation degree gives zero.
Complex tail_eval(const NormalizedSeries& f, int n, Complex z);

/// 1 + z f''(z)/f'(z). Signals |f'(z)| <= 1e-12 as SingularPointError.
Complex log_derivative_at(const NormalizedSeries& f, Complex z);

/// z f'(z)/f(z); exactly 1 at z = 0 (removable singularity).
/// Signals |f(z)| <= 1e-12 at z != 0 as SingularPointError.
Complex star_quotient_at(const NormalizedSeries& f, Complex z);

}  // namespace secradii
