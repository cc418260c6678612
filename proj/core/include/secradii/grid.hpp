#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace secradii {

/// Polar sampling grid for the open unit disk: radii equally spaced in
/// (0, maxRadius], angles equally spaced in [0, 2*pi).
struct DiskGrid {
    int radiusCount;
    int angleCount;
    double maxRadius;

    DiskGrid(int radiusCount_, int angleCount_, double maxRadius_)
        : radiusCount(radiusCount_), angleCount(angleCount_), maxRadius(maxRadius_) {
        if (radiusCount < 2) throw std::invalid_argument("DiskGrid: radiusCount must be >= 2");
        if (angleCount < 8) throw std::invalid_argument("DiskGrid: angleCount must be >= 8");
        if (!(maxRadius > 0.0 && maxRadius < 1.0))
            throw std::invalid_argument("DiskGrid: maxRadius must lie in (0,1)");
    }

    /// Default sweep resolution, 64 radii by 256 angles up to 0.99.
    static DiskGrid standard(double maxRadius = 0.99) { return {64, 256, maxRadius}; }

    /// Refined resolution used to re-check failures before reporting them.
    static DiskGrid fine(double maxRadius = 0.99) { return {256, 1024, maxRadius}; }

    double radiusAt(int i) const { return maxRadius * static_cast<double>(i) / radiusCount; }

    /// Visits every sample point in canonical order (radii outer, angles
    /// inner). fn receives the point r_i * e^{i theta_j}.
    template <class Fn>
    void for_each_point(Fn&& fn) const {
        constexpr double kTwoPi = 6.283185307179586476925286766559;
        for (int i = 1; i <= radiusCount; ++i) {
            const double r = radiusAt(i);
            for (int j = 0; j < angleCount; ++j) {
                const double th = kTwoPi * j / angleCount;
                fn(std::complex<double>(r * std::cos(th), r * std::sin(th)));
            }
        }
    }
};

}  // namespace secradii
