#pragma once

#include <functional>
#include <string>

namespace secradii {

inline constexpr const char* kVersion = "0.1.0";

enum class Property { ConvexOrder, StarlikeOrder, CloseToConvexOrder };

const char* property_name(Property p);         // "convex" / "starlike" / "ctc"
Property property_from_name(const std::string& name);

struct RadiusQuery {
    double alpha;
    double beta;
    Property property;
};

struct RadiusResult {
    double rho = 0.0;
    double residual = 0.0;
    double bracketLow = 0.0;
    double bracketHigh = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Indicator whose least positive root in [0,1) is the convexity-of-order-beta
/// radius for sections:
///   (1-r)^a (r(1+a-b) - (1-b)) + a r ((2-b) r - (1-b)) - a (1-b)(1-r) ln(1-r).
double convexity_indicator(double alpha, double beta, double rho);

/// Starlikeness indicator. Vanishes identically at rho = 0 (structural root);
/// the solver skips past it with a positive floor.
double starlikeness_indicator(double alpha, double beta, double rho);

/// Close-to-convexity indicator (1-r)^a + a(ln(1-r) + r) - b.
double ctc_indicator(double alpha, double beta, double rho);

/// Scans [floor, 1-1e-9] in scanStep increments for the first sign change,
/// then bisects the bracket down to width tol (and at least 1e-12).
/// Non-convergence is a result state, not an exception.
RadiusResult least_positive_root(const std::function<double(double)>& indicator,
                                 double floor, double scanStep, double tol);

/// Dispatches the query to its indicator with the standard floors
/// (1e-3 for starlike, 0 otherwise), scanStep 1e-3 and tol 1e-12.
/// Guaranteed range: requires alpha in (0,1] and beta in [0,1).
RadiusResult radius_of_property(const RadiusQuery& q);

/// Same solve without the alpha <= 1 guarantee-range cap (still alpha > 0,
/// beta in [0,1)); backs the command-line exploratory mode.
RadiusResult solve_property_radius(double alpha, double beta, Property property,
                                   double tol = 1e-12);

/// The auxiliary curves psi_1 .. psi_11 from the radius derivations.
/// x is beta for indices {1,2,5,6,9,10} and rho for {3,4,7,8,11}.
double aux_psi(int index, double alpha, double x);

struct ClassicalConstants {
    double rhoConvex;    // root of 1 - 2r + (1-r) ln(1-r)
    double rhoStarlike;  // root of r - r^2 + (2-3r) ln(1-r)
    double rhoCtc;       // 1 - e^{-1}, root of 1 + ln(1-r)
};

/// The three alpha=1, beta=0 radii at tol 1e-12.
ClassicalConstants classical_constants();

}  // namespace secradii
