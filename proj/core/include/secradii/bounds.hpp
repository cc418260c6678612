#pragma once

namespace secradii {

// Published reference constants for the C_n / E_n / F_n threshold sequences,
// stored verbatim as the contract; recompute_* rebuilds each from its
// defining expression at rhoOuter = 4/5 so transcription drift is caught.
inline constexpr double kCtcDiskRadius = 0.6321;
inline constexpr double kStarlikeDiskRadius = 0.5698;
inline constexpr double kCnScale = 42.09795334;
inline constexpr double kEnScale = 27.67852953;
inline constexpr double kFnScale = 1.529401131;
inline constexpr double kArgDerivativeBoundDeg = 39.206;
inline constexpr double kCtcAngleBudgetDeg = 50.794;
inline constexpr double kStarArgBoundDeg = 19.88378;
inline constexpr double kStarAngleBudgetDeg = 70.116271;

/// |sigma_n(z)| <= alpha ((1-r) ln(1-r) + r - r^2/2) for |z| = r.
double tail_abs_bound(double alpha, double rho);

/// |sigma_n'(z)| <= -alpha (ln(1-r) + r).
double tail_deriv_bound(double alpha, double rho);

/// |sigma_n''(z)| <= alpha r / (1-r).
double tail_second_deriv_bound(double alpha, double rho);

/// S_1(n, r) = sum_{k=n+1}^inf r^k / (k(k-1)), summed until the geometric
/// remainder bound r^{K+1} / ((1-r) K (K-1)) drops below 1e-16.
double s1_value(int n, double rho);

/// S_2(n, r) = sum_{k=n}^inf r^k / k, with the analogous remainder rule.
double s2_value(int n, double rho);

/// |s_n'/f' - 1| majorant for |z| < rhoOuter:
///   |z|^n (1/n + (pi/sqrt(6) + 1) |z| sqrt(2p - p^2) / (p^n (1-p)(p - |z|)))
/// with p = rhoOuter. Blows up as |z| -> rhoOuter, so that is rejected.
double section_deriv_ratio_bound(int n, double rhoOuter, double zAbs);

/// |s_n/f - 1| majorant |z|^n (1/(n(n+1)) + 2|z| / (sqrt(3)(1 - |z|))).
double section_ratio_bound(int n, double zAbs);

/// C_n = 0.6321^n (1/n + 5^n * kCnScale / 4^n).
double cn_value(int n);

/// E_n = 0.5698^n (1/n + 5^n * kEnScale / 4^n).
double en_value(int n);

/// F_n = 0.5698^n (1/(n(n+1)) + kFnScale).
double fn_value(int n);

/// Least n >= 2 with C_n <= sin(50.794 deg); C_n > 1 fails automatically.
int threshold_ctc();

/// Least n >= 2 with E_n <= 1, F_n <= 1 and
/// arcsin(E_n) + arcsin(F_n) < 70.116271 deg.
int threshold_starlike();

/// Threshold recomputation hooks for the constant-stability check.
int threshold_ctc_with_scale(double cnScale);
int threshold_starlike_with_scales(double enScale, double fnScale);

/// The scale constants rebuilt from their defining expressions.
double recompute_cn_scale();
double recompute_en_scale();
double recompute_fn_scale();

/// Least rho in (0,1] with sum_{k=2}^{n} rho^{k-1}/(k-1) = 1, by bisection;
/// for n = 2 the solution is rho = 1.
double fig3_radius(int n);

/// Evaluator facade over the named sequences; rho only matters for S1/S2.
struct BoundSequence {
    enum class Id { S1, S2, C, E, F };
    Id id;
    double rho = 0.0;

    double value(int n) const;
};

}  // namespace secradii
