// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "secradii/series.hpp"

namespace oracles {

using secradii::Complex;

/// Koebe function z/(1-z)^2 truncated: a_k = k. Not a class member; used as
/// a fixture and non-member witness.
inline secradii::NormalizedSeries koebe(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(k);
    return secradii::NormalizedSeries(std::move(c));
}

/// Koebe second section z + 2z^2, padded.
inline secradii::NormalizedSeries koebe_s2(int order = 8) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    c[2] = 2.0;
    return secradii::NormalizedSeries(std::move(c));
}

/// z - z^2/2, the alpha=1, n=2 extremal, padded.
inline secradii::NormalizedSeries half_extremal(int order = 8) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    c[2] = -0.5;
    return secradii::NormalizedSeries(std::move(c));
}

/// Least positive root by dense scan plus plain interval halving; written
/// from scratch so it shares nothing with least_positive_root.
inline double dense_scan_root(const std::function<double(double)>& f, double floor, double step) {
    double x = floor, fx = f(x);
    const double upper = 1.0 - 1e-9;
    while (x < upper) {
        const double y = std::min(x + step, upper);
        const double fy = f(y);
        if (fx * fy <= 0.0) {
            double lo = x, hi = y, flo = fx;
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            return 0.5 * (lo + hi);
        }
        x = y;
        fx = fy;
    }
    return -1.0;  // no sign change found
}

inline double unit_double(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Random normalized series with |a_k| <= 1/(k(k-1)), the class-shaped
/// coefficient envelope used by the reciprocal property tests.
inline secradii::NormalizedSeries random_enveloped_series(std::uint64_t seed, int order) {
    std::mt19937_64 eng(seed);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    for (int k = 2; k <= order; ++k) {
        const double mag = unit_double(eng) / (static_cast<double>(k) * (k - 1.0));
        const double phase = 2.0 * 3.14159265358979323846 * unit_double(eng);
        c[static_cast<std::size_t>(k)] = std::polar(mag, phase);
    }
    return secradii::NormalizedSeries(std::move(c));
}

/// Random series with c_0 = 1 (for the integrate/differentiate round trip).
inline secradii::ComplexSeries random_unit_constant_series(std::uint64_t seed, int order) {
    std::mt19937_64 eng(seed);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1.0;
    for (int k = 1; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = Complex{2.0 * unit_double(eng) - 1.0, 2.0 * unit_double(eng) - 1.0};
    return secradii::ComplexSeries(std::move(c));
}

/// Random series with zero constant term (exponential property tests).
inline secradii::ComplexSeries random_zero_constant_series(std::uint64_t seed, int order) {
    std::mt19937_64 eng(seed);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) {
        const double scale = 1.0 / (1.0 + k);
        c[static_cast<std::size_t>(k)] =
            Complex{scale * (2.0 * unit_double(eng) - 1.0), scale * (2.0 * unit_double(eng) - 1.0)};
    }
    return secradii::ComplexSeries(std::move(c));
}

// long-double evaluations of the alpha=1, beta=0 classical indicators
inline long double classical_convex(long double r) { return 1.0L - 2.0L * r + (1.0L - r) * std::log(1.0L - r); }
inline long double classical_starlike(long double r) { return r - r * r + (2.0L - 3.0L * r) * std::log(1.0L - r); }
inline long double classical_ctc(long double r) { return 1.0L + std::log(1.0L - r); }

}  // namespace oracles
