#include "secradii/classg.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace secradii {

namespace {

// 53-bit mantissa mapping; (0,1] for weights so normalization never divides
// by zero, [0,1) for angles.
double unit_open_closed(std::uint64_t x) { return (static_cast<double>(x >> 11) + 1.0) * 0x1.0p-53; }
double unit_half_open(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

GAlphaSpec::GAlphaSpec(double alpha_) : alpha(alpha_) {
    if (!(alpha > 0.0)) throw std::invalid_argument("GAlphaSpec: alpha must be > 0");
}

HerglotzSpec::HerglotzSpec(std::vector<double> weights_, std::vector<double> angles_,
                           std::uint64_t seed_)
    : weights(std::move(weights_)), angles(std::move(angles_)), seed(seed_) {
    const std::size_t j = weights.size();
    if (j < 1 || j > 8) throw std::invalid_argument("HerglotzSpec: atom count must lie in [1, 8]");
    if (angles.size() != j) throw std::invalid_argument("HerglotzSpec: weights/angles length mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("HerglotzSpec: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("HerglotzSpec: weights must sum to 1");
    for (double t : angles) {
        if (!(t >= 0.0 && t < 2.0 * std::numbers::pi))
            throw std::invalid_argument("HerglotzSpec: angles must lie in [0, 2*pi)");
    }
}

HerglotzSpec HerglotzSpec::from_seed(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    const int j = 1 + static_cast<int>(eng() % 8);
    std::vector<double> w(static_cast<std::size_t>(j));
    std::vector<double> t(static_cast<std::size_t>(j));
    double sum = 0.0;
    for (double& wi : w) {
        wi = unit_open_closed(eng());
        sum += wi;
    }
    for (double& wi : w) wi /= sum;
    for (double& ti : t) ti = 2.0 * std::numbers::pi * unit_half_open(eng());
    return HerglotzSpec(std::move(w), std::move(t), seed);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t globalSeed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(globalSeed ^ (stream * 0xA0761D6478BD642Full)) + index);
}

ComplexSeries extremal_derivative(double alpha, int n, int order) {
    if (!(alpha > 0.0)) throw std::invalid_argument("extremal_derivative: alpha must be > 0");
    if (n < 2) throw std::invalid_argument("extremal_derivative: n must be >= 2");
    return binomial_power(alpha / (n - 1), n - 1, order);
}

NormalizedSeries extremal_function(double alpha, int n, int order) {
    if (order < 2) throw std::invalid_argument("extremal_function: order must be >= 2");
    return integrate_normalized(extremal_derivative(alpha, n, order - 1));
}

double coefficient_bound(double alpha, int k) {
    if (!(alpha > 0.0)) throw std::invalid_argument("coefficient_bound: alpha must be > 0");
    if (k < 2) throw std::invalid_argument("coefficient_bound: k must be >= 2");
    return alpha / (static_cast<double>(k) * (k - 1.0));
}

NormalizedSeries random_member(const GAlphaSpec& spec, const HerglotzSpec& atoms, int order) {
    if (order < 2) throw std::invalid_argument("random_member: order must be >= 2");
    const int j = atoms.atom_count();
    std::vector<Complex> rot(static_cast<std::size_t>(j));
    std::vector<Complex> pow(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) {
        rot[static_cast<std::size_t>(i)] = std::polar(1.0, atoms.angles[static_cast<std::size_t>(i)]);
        pow[static_cast<std::size_t>(i)] = rot[static_cast<std::size_t>(i)];
    }
    // q_k = -alpha sum_j lambda_j e^{i (k+1) theta_j}; integral has q_{k-1}/k.
    const int dOrder = order - 1;
    std::vector<Complex> intq(static_cast<std::size_t>(dOrder) + 1);
    for (int k = 1; k <= dOrder; ++k) {
        Complex qk{0.0, 0.0};
        for (int i = 0; i < j; ++i) qk += atoms.weights[static_cast<std::size_t>(i)] * pow[static_cast<std::size_t>(i)];
        intq[static_cast<std::size_t>(k)] = -spec.alpha * qk / static_cast<double>(k);
        for (int i = 0; i < j; ++i) pow[static_cast<std::size_t>(i)] *= rot[static_cast<std::size_t>(i)];
    }
    const ComplexSeries fprime = exponential(ComplexSeries(std::move(intq)), dOrder);
    return integrate_normalized(fprime);
}

double membership_margin(const NormalizedSeries& f, double alpha, const DiskGrid& grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("membership_margin: alpha must be > 0");
    const ComplexSeries fp = differentiate(f);
    const ComplexSeries fpp = differentiate(fp);
    const double cap = 1.0 + alpha / 2.0;
    double worst = -std::numeric_limits<double>::infinity();
    grid.for_each_point([&](Complex z) {
        const Complex d = eval(fp, z);
        if (std::abs(d) <= 1e-12)
            throw SingularPointError("membership_margin: f'(z) numerically vanishes", z);
        const double v = (1.0 + z * eval(fpp, z) / d).real() - cap;
        if (v > worst) worst = v;
    });
    return worst;
}

}  // namespace secradii
