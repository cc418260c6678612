#include "secradii/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace secradii {

namespace {

constexpr double kDomainEdge = 1.0 - 1e-9;
constexpr double kTailStop = 1e-16;  // geometric remainder threshold
constexpr int kThresholdScanMax = 1000;

void require_rho(double rho) {
    if (!(rho >= 0.0 && rho <= kDomainEdge))
        throw std::domain_error("bounds: rho must lie in [0, 1-1e-9]");
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("bounds: alpha must lie in (0, 1]");
}

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace

double tail_abs_bound(double alpha, double rho) {
    require_alpha(alpha);
    require_rho(rho);
    return alpha * ((1.0 - rho) * std::log1p(-rho) + rho - rho * rho / 2.0);
}

double tail_deriv_bound(double alpha, double rho) {
    require_alpha(alpha);
    require_rho(rho);
    return -alpha * (std::log1p(-rho) + rho);
}

double tail_second_deriv_bound(double alpha, double rho) {
    require_alpha(alpha);
    require_rho(rho);
    return alpha * rho / (1.0 - rho);
}

double s1_value(int n, double rho) {
    if (n < 2) throw std::invalid_argument("s1_value: n must be >= 2");
    require_rho(rho);
    if (rho == 0.0) return 0.0;
    double sum = 0.0;
    double rp = std::pow(rho, n + 1);
    for (int k = n + 1;; ++k) {
        sum += rp / (static_cast<double>(k) * (k - 1.0));
        // remainder after k is below rho^{k+1} / ((1-rho) k (k-1))
        if (rp * rho / ((1.0 - rho) * k * (k - 1.0)) < kTailStop) break;
        rp *= rho;
    }
    return sum;
}

double s2_value(int n, double rho) {
    if (n < 2) throw std::invalid_argument("s2_value: n must be >= 2");
    require_rho(rho);
    if (rho == 0.0) return 0.0;
    double sum = 0.0;
    double rp = std::pow(rho, n);
    for (int k = n;; ++k) {
        sum += rp / static_cast<double>(k);
        if (rp * rho / ((1.0 - rho) * (k + 1.0)) < kTailStop) break;
        rp *= rho;
    }
    return sum;
}

double section_deriv_ratio_bound(int n, double rhoOuter, double zAbs) {
    if (n < 2) throw std::invalid_argument("section_deriv_ratio_bound: n must be >= 2");
    if (!(zAbs > 0.0 && zAbs < rhoOuter && rhoOuter < 1.0))
        throw std::domain_error("section_deriv_ratio_bound: need 0 < |z| < rhoOuter < 1");
    const double p = rhoOuter;
    const double scaffold = (std::numbers::pi / std::sqrt(6.0) + 1.0) * zAbs *
                            std::sqrt(2.0 * p - p * p) /
                            (std::pow(p, n) * (1.0 - p) * (p - zAbs));
    return std::pow(zAbs, n) * (1.0 / n + scaffold);
}

double section_ratio_bound(int n, double zAbs) {
    if (n < 2) throw std::invalid_argument("section_ratio_bound: n must be >= 2");
    if (!(zAbs > 0.0 && zAbs < 1.0))
        throw std::domain_error("section_ratio_bound: |z| must lie in (0, 1)");
    return std::pow(zAbs, n) *
           (1.0 / (static_cast<double>(n) * (n + 1.0)) +
            2.0 * zAbs / (std::sqrt(3.0) * (1.0 - zAbs)));
}

double cn_value(int n) {
    if (n < 1) throw std::invalid_argument("cn_value: n must be >= 1");
    return std::pow(kCtcDiskRadius, n) * (1.0 / n + std::pow(1.25, n) * kCnScale);
}

double en_value(int n) {
    if (n < 1) throw std::invalid_argument("en_value: n must be >= 1");
    return std::pow(kStarlikeDiskRadius, n) * (1.0 / n + std::pow(1.25, n) * kEnScale);
}

double fn_value(int n) {
    if (n < 1) throw std::invalid_argument("fn_value: n must be >= 1");
    return std::pow(kStarlikeDiskRadius, n) *
           (1.0 / (static_cast<double>(n) * (n + 1.0)) + kFnScale);
}

int threshold_ctc_with_scale(double cnScale) {
    const double cap = std::sin(deg2rad(kCtcAngleBudgetDeg));
    for (int n = 2; n <= kThresholdScanMax; ++n) {
        const double cn = std::pow(kCtcDiskRadius, n) * (1.0 / n + std::pow(1.25, n) * cnScale);
        if (cn <= cap) return n;
    }
    throw std::runtime_error("threshold_ctc: no crossing found");
}

int threshold_starlike_with_scales(double enScale, double fnScale) {
    for (int n = 2; n <= kThresholdScanMax; ++n) {
        const double en = std::pow(kStarlikeDiskRadius, n) * (1.0 / n + std::pow(1.25, n) * enScale);
        const double fn = std::pow(kStarlikeDiskRadius, n) *
                          (1.0 / (static_cast<double>(n) * (n + 1.0)) + fnScale);
        if (en > 1.0 || fn > 1.0) continue;  // arcsine undefined
        if (rad2deg(std::asin(en)) + rad2deg(std::asin(fn)) < kStarAngleBudgetDeg) return n;
    }
    throw std::runtime_error("threshold_starlike: no crossing found");
}

int threshold_ctc() { return threshold_ctc_with_scale(kCnScale); }

int threshold_starlike() { return threshold_starlike_with_scales(kEnScale, kFnScale); }

double recompute_cn_scale() {
    const double p = 0.8, z = kCtcDiskRadius;
    return (std::numbers::pi / std::sqrt(6.0) + 1.0) * z * std::sqrt(2.0 * p - p * p) /
           ((1.0 - p) * (p - z));
}

double recompute_en_scale() {
    const double p = 0.8, z = kStarlikeDiskRadius;
    return (std::numbers::pi / std::sqrt(6.0) + 1.0) * z * std::sqrt(2.0 * p - p * p) /
           ((1.0 - p) * (p - z));
}

double recompute_fn_scale() {
    const double z = kStarlikeDiskRadius;
    return 2.0 * z / (std::sqrt(3.0) * (1.0 - z));
}

double fig3_radius(int n) {
    if (n < 2) throw std::invalid_argument("fig3_radius: n must be >= 2");
    if (n == 2) return 1.0;
    const auto g = [n](double r) {
        double sum = 0.0, rp = r;
        for (int j = 1; j <= n - 1; ++j) {
            sum += rp / j;
            rp *= r;
        }
        return sum - 1.0;
    };
    double a = 0.0, b = 1.0;  // g(0) = -1, g(1) = H_{n-1} - 1 >= 1/2 for n >= 3
    for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
        const double mid = 0.5 * (a + b);
        if (g(mid) < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

double BoundSequence::value(int n) const {
    switch (id) {
        case Id::S1: return s1_value(n, rho);
        case Id::S2: return s2_value(n, rho);
        case Id::C: return cn_value(n);
        case Id::E: return en_value(n);
        case Id::F: return fn_value(n);
    }
    throw std::invalid_argument("BoundSequence: unknown id");
}

}  // namespace secradii
