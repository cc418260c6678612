#include "secradii/radii.hpp"

#include <cmath>
#include <stdexcept>

namespace secradii {

namespace {

constexpr double kDomainEdge = 1.0 - 1e-9;  // clip against the log singularity
constexpr double kScanStep = 1e-3;
constexpr double kStarlikeFloor = 1e-3;     // skips the structural root at 0
constexpr double kBracketTol = 1e-12;
constexpr double kResidualTol = 1e-10;

void require_rho(double rho) {
    if (!(rho >= 0.0 && rho <= kDomainEdge))
        throw std::domain_error("indicator: rho must lie in [0, 1-1e-9]");
}

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("beta must lie in [0, 1)");
}

void require_alpha_positive(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be > 0");
}

}  // namespace

const char* property_name(Property p) {
    switch (p) {
        case Property::ConvexOrder: return "convex";
        case Property::StarlikeOrder: return "starlike";
        case Property::CloseToConvexOrder: return "ctc";
    }
    return "unknown";
}

Property property_from_name(const std::string& name) {
    if (name == "convex") return Property::ConvexOrder;
    if (name == "starlike") return Property::StarlikeOrder;
    if (name == "ctc") return Property::CloseToConvexOrder;
    throw std::invalid_argument("unknown property: " + name + " (expected convex|starlike|ctc)");
}

double convexity_indicator(double alpha, double beta, double rho) {
    require_rho(rho);
    const double l = std::log1p(-rho);
    return std::pow(1.0 - rho, alpha) * (rho * (1.0 + alpha - beta) - (1.0 - beta)) +
           alpha * rho * ((2.0 - beta) * rho - (1.0 - beta)) -
           alpha * (1.0 - beta) * (1.0 - rho) * l;
}

double starlikeness_indicator(double alpha, double beta, double rho) {
    require_rho(rho);
    const double l = std::log1p(-rho);
    const double first = (1.0 - std::pow(1.0 - rho, 1.0 + alpha)) *
                         ((1.0 + alpha) * (1.0 - beta - rho) + beta * rho);
    const double second = alpha * (1.0 + alpha) * (1.0 + alpha - rho) *
                          (((3.0 - beta) * rho - (2.0 - beta)) * l - (2.0 - beta) * rho +
                           (2.0 - beta / 2.0) * rho * rho);
    return first + second;
}

double ctc_indicator(double alpha, double beta, double rho) {
    require_rho(rho);
    return std::pow(1.0 - rho, alpha) + alpha * (std::log1p(-rho) + rho) - beta;
}

RadiusResult least_positive_root(const std::function<double(double)>& indicator,
                                 double floor, double scanStep, double tol) {
    if (!(scanStep > 0.0)) throw std::invalid_argument("least_positive_root: scanStep must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("least_positive_root: tol must be > 0");
    if (!(floor >= 0.0 && floor < 1.0)) throw std::invalid_argument("least_positive_root: floor must lie in [0, 1)");

    RadiusResult res;
    double a = floor;
    double fa = indicator(a);
    if (fa == 0.0) {
        res = {a, 0.0, a, a, true, 0};
        return res;
    }

    // scan for the first sign change
    double b = a, fb = fa;
    bool bracketed = false;
    while (b < kDomainEdge) {
        const double next = std::min(b + scanStep, kDomainEdge);
        const double fnext = indicator(next);
        if (fb * fnext < 0.0 || fnext == 0.0) {
            a = b;
            fa = fb;
            b = next;
            fb = fnext;
            bracketed = true;
            break;
        }
        b = next;
        fb = fnext;
    }
    if (!bracketed) {
        res.rho = kDomainEdge;
        res.residual = fb;
        res.bracketLow = floor;
        res.bracketHigh = kDomainEdge;
        res.converged = false;
        return res;
    }

    const double width = std::min(tol, kBracketTol);
    int iter = 0;
    while (b - a > width && iter < 200) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // bracket at floating-point resolution
        const double fm = indicator(mid);
        ++iter;
        if (fm == 0.0) {
            a = b = mid;
            fa = fm;
            break;
        }
        if (fa * fm < 0.0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }

    res.rho = 0.5 * (a + b);
    res.residual = indicator(res.rho);
    res.bracketLow = a;
    res.bracketHigh = b;
    res.iterations = iter;
    res.converged = (b - a) <= kBracketTol && std::abs(res.residual) <= kResidualTol;
    return res;
}

RadiusResult solve_property_radius(double alpha, double beta, Property property, double tol) {
    require_alpha_positive(alpha);
    require_beta(beta);
    switch (property) {
        case Property::ConvexOrder:
            return least_positive_root([=](double r) { return convexity_indicator(alpha, beta, r); },
                                       0.0, kScanStep, tol);
        case Property::StarlikeOrder:
            return least_positive_root([=](double r) { return starlikeness_indicator(alpha, beta, r); },
                                       kStarlikeFloor, kScanStep, tol);
        case Property::CloseToConvexOrder:
            return least_positive_root([=](double r) { return ctc_indicator(alpha, beta, r); },
                                       0.0, kScanStep, tol);
    }
    throw std::invalid_argument("solve_property_radius: unknown property");
}

RadiusResult radius_of_property(const RadiusQuery& q) {
    if (!(q.alpha > 0.0 && q.alpha <= 1.0))
        throw std::domain_error("radius_of_property: alpha must lie in (0, 1]");
    require_beta(q.beta);
    return solve_property_radius(q.alpha, q.beta, q.property, 1e-12);
}

double aux_psi(int index, double alpha, double x) {
    require_alpha_positive(alpha);
    const bool betaKind = (index == 1 || index == 2 || index == 5 || index == 6 ||
                           index == 9 || index == 10);
    if (betaKind) {
        require_beta(x);
    } else {
        require_rho(x);
    }
    const double a = alpha;
    switch (index) {
        case 1: {
            const double b = x;
            return (1.0 - b) / (a * (2.0 - b));
        }
        case 2: {
            const double b = x;
            return (std::sqrt((2.0 - b) * (2.0 - b) + 2.0 * a * (1.0 - b) * (3.0 - b)) -
                    a * (2.0 - b)) /
                   (a * (3.0 - b));
        }
        case 3:
        case 11: {
            const double r = x;
            return std::pow(1.0 - r, a) + a * (std::log1p(-r) + r);
        }
        case 4: {
            const double r = x;
            const double l = std::log1p(-r);
            const double num = std::pow(1.0 - r, a) * (1.0 - r * (1.0 + a)) +
                               a * r * (1.0 - 2.0 * r) + a * (1.0 - r) * l;
            const double den = (1.0 - r) * (std::pow(1.0 - r, a) + a * (l + r));
            return num / den;
        }
        case 5: {
            const double b = x;
            return 2.0 * (1.0 - b) / (a * (2.0 - b));
        }
        case 6: {
            const double b = x;
            return (std::sqrt(9.0 * (2.0 - b) * (2.0 - b) * a * a +
                              24.0 * a * (1.0 - b) * (3.0 - b)) -
                    3.0 * (2.0 - b) * a) /
                   (2.0 * a * (3.0 - b));
        }
        case 7: {
            const double r = x;
            return (1.0 - std::pow(1.0 - r, 1.0 + a)) / (1.0 + a) -
                   a * ((1.0 - r) * std::log1p(-r) + r - r * r / 2.0);
        }
        case 8: {
            const double r = x;
            const double l = std::log1p(-r);
            const double num = (1.0 - r) * (1.0 - std::pow(1.0 - r, 1.0 + a)) +
                               a * (1.0 + a - r) * ((3.0 * r - 2.0) * l - 2.0 * r + 2.0 * r * r);
            const double den = (1.0 + a - r) * ((1.0 - std::pow(1.0 - r, 1.0 + a)) / (1.0 + a) -
                                                a * ((1.0 - r) * l + r - r * r / 2.0));
            return num / den;
        }
        case 9: {
            const double b = x;
            return (1.0 - b) / a;
        }
        case 10: {
            const double b = x;
            return std::sqrt(1.0 + 2.0 * (1.0 - b) / a) - 1.0;
        }
        default:
            throw std::invalid_argument("aux_psi: index must lie in [1, 11]");
    }
}

ClassicalConstants classical_constants() {
    const auto convex = least_positive_root(
        [](double r) { return 1.0 - 2.0 * r + (1.0 - r) * std::log1p(-r); }, 0.0, kScanStep, 1e-12);
    const auto starlike = least_positive_root(
        [](double r) { return r - r * r + (2.0 - 3.0 * r) * std::log1p(-r); }, kStarlikeFloor,
        kScanStep, 1e-12);
    return {convex.rho, starlike.rho, 1.0 - std::exp(-1.0)};
}

}  // namespace secradii
