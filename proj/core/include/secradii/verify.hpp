#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "secradii/classg.hpp"
#include "secradii/grid.hpp"
#include "secradii/radii.hpp"
#include "secradii/series.hpp"

namespace secradii {

/// Outcome of one desk-scale check. Margins are oriented so that positive
/// means satisfied; pass is worstMargin > -1e-9. The witness is the sample
/// point (or parameter pair) achieving the worst margin.
struct VerificationReport {
    std::string checkId;
    bool pass = false;
    double worstMargin = 0.0;
    Complex witness{0.0, 0.0};
    std::map<std::string, double> parameters;
};

VerificationReport make_report(std::string checkId, double worstMargin, Complex witness,
                               std::map<std::string, double> parameters = {});

/// Re(1 + z s_n''/s_n') > beta over the grid, plus the non-vanishing
/// requirement min |s_n'| >= 1e-9. Requires grid.maxRadius <= rho < 1.
VerificationReport check_convex_order(const NormalizedSeries& f, int n, double rho,
                                      double beta, const DiskGrid& grid);

/// Re(z s_n'/s_n) > beta over the grid with min |s_n| >= 1e-9 on the
/// punctured grid.
VerificationReport check_starlike_order(const NormalizedSeries& f, int n, double rho,
                                        double beta, const DiskGrid& grid);

/// Re(s_n') > beta over the grid (the close-to-convexity criterion with the
/// identity as comparison function).
VerificationReport check_ctc_order(const NormalizedSeries& f, int n, double rho,
                                   double beta, const DiskGrid& grid);

/// Largest r on the radialStep scan grid such that the property holds on
/// circles of every radius <= r (256 angles); 0 if it fails immediately.
double empirical_property_radius(const NormalizedSeries& f, int n, Property property,
                                 double beta, double radialStep);

/// Coefficient-bound margin of a single member: min over k in [2, maxIndex]
/// of alpha/(k(k-1)) - |a_k|.
VerificationReport coefficient_check(const NormalizedSeries& f, double alpha, int maxIndex);

/// Coefficient-bound sweep over seedCount random members.
VerificationReport coefficient_bound_suite(double alpha, int seedCount, int order,
                                           std::uint64_t seed = kDefaultSeed);

/// For b = coefficients of z/f: asserts sum_{k<=n} |b_k|^2 <= (1/3)(1-4^-n)
/// for every n <= order, and |b_k| <= 1/sqrt(3), both with 1e-9 slack.
VerificationReport rogosinski_suite(const NormalizedSeries& f, int order);

/// Margin of section_ratio_bound(n,|z|) - |s_n(z)/f(z) - 1| over the grid;
/// points with |f(z)| < 1e-12 are skipped and counted in the parameters.
VerificationReport section_ratio_suite(const NormalizedSeries& f, int n, const DiskGrid& grid);

/// One monotonicity claim: the named psi curve is decreasing in `parameter`
/// ("alpha" or "beta"), checked by central differences on the given grids.
struct MonotonicityTarget {
    int psiIndex = 1;
    std::string parameterName;        // "alpha" or "beta"
    std::vector<double> alphaGrid;
    std::vector<double> secondGrid;   // beta or rho values per psi kind
};

VerificationReport monotonicity_check(const MonotonicityTarget& target);
std::vector<MonotonicityTarget> default_monotonicity_targets();
std::vector<VerificationReport> monotonicity_suite(const std::vector<MonotonicityTarget>& targets);

// Suite drivers. Every suite is deterministic for a fixed seed, serial, and
// returns reports sorted by checkId.
std::vector<VerificationReport> suite_coeffs(std::uint64_t seed = kDefaultSeed);
std::vector<VerificationReport> suite_radii();
std::vector<VerificationReport> suite_tails(std::uint64_t seed = kDefaultSeed);
std::vector<VerificationReport> suite_sections(std::uint64_t seed = kDefaultSeed);
std::vector<VerificationReport> suite_rogosinski(std::uint64_t seed = kDefaultSeed);
std::vector<VerificationReport> suite_monotonicity();
std::vector<VerificationReport> suite_thresholds();

/// Runs one suite by name: all|coeffs|radii|tails|sections|rogosinski|
/// monotonicity|thresholds. Throws std::invalid_argument on unknown names.
std::vector<VerificationReport> run_suite(std::string_view name, std::uint64_t seed = kDefaultSeed);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace secradii
