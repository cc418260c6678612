#pragma once

#include <cstdint>
#include <vector>

#include "secradii/grid.hpp"
#include "secradii/series.hpp"

namespace secradii {

/// Default seed for everything randomized; all suite randomness flows from it.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Parameters of the class of normalized locally univalent functions with
/// Re(1 + z f''/f') < 1 + alpha/2 on the disk. Operations backed by the radius
/// guarantees require alpha <= 1; construction only demands alpha > 0.
struct GAlphaSpec {
    double alpha;
    explicit GAlphaSpec(double alpha_);
};

/// Finite-atom Herglotz data for a Caratheodory function
///   p(z) = sum_j lambda_j (1 + e^{i theta_j} z) / (1 - e^{i theta_j} z),
/// which has p(0) = 1 and Re p > 0 on the disk. Atom count J in [1, 8].
struct HerglotzSpec {
    std::vector<double> weights;  // lambda_j >= 0, summing to 1
    std::vector<double> angles;   // theta_j in [0, 2*pi)
    std::uint64_t seed = kDefaultSeed;

    HerglotzSpec(std::vector<double> weights_, std::vector<double> angles_,
                 std::uint64_t seed_ = kDefaultSeed);

    int atom_count() const noexcept { return static_cast<int>(weights.size()); }

    /// Deterministic expansion of a seed into atoms: J in [1,8], weights
    /// normalized to sum 1, angles uniform in [0, 2*pi).
    static HerglotzSpec from_seed(std::uint64_t seed);
};

/// SplitMix64 step, used to expand one global seed into per-case seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-case seed for (global seed, stream, index); deterministic.
std::uint64_t derive_seed(std::uint64_t globalSeed, std::uint64_t stream, std::uint64_t index);

/// Derivative of the sharp coefficient-bound extremal, (1 - z^{n-1})^{alpha/(n-1)}.
ComplexSeries extremal_derivative(double alpha, int n, int order);

/// The extremal itself; its degree-n coefficient has modulus exactly
/// alpha/(n(n-1)).
NormalizedSeries extremal_function(double alpha, int n, int order);

/// Sharp bound alpha/(k(k-1)) on |a_k| over the class.
double coefficient_bound(double alpha, int k);

/// Member built from Herglotz data: with q(z) = (alpha/2)(1 - p(z))/z the
/// series f' = exp(integral of q) satisfies 1 + z f''/f' = 1 + alpha/2
/// - (alpha/2) p(z), so the function lies in the class by construction.
/// Bitwise reproducible for fixed spec.
NormalizedSeries random_member(const GAlphaSpec& spec, const HerglotzSpec& atoms, int order);

/// max over the grid of Re(1 + z f''/f') - (1 + alpha/2). Negative certifies
/// the sampled condition; a grid can refute membership, never prove it.
double membership_margin(const NormalizedSeries& f, double alpha, const DiskGrid& grid);

}  // namespace secradii
