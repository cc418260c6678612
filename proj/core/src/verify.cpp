#include "secradii/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>

#include "secradii/bounds.hpp"

namespace secradii {

namespace {

constexpr double kPassFloor = -1e-9;
constexpr double kVanishTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// seed streams, one per randomized suite
constexpr std::uint64_t kStreamCoeffs = 1;
constexpr std::uint64_t kStreamTails = 2;
constexpr std::uint64_t kStreamSections = 3;
constexpr std::uint64_t kStreamRogosinski = 4;
constexpr std::uint64_t kStreamMembership = 5;

constexpr int kMembershipOrder = 1024;  // keeps truncation noise below the
                                        // boundary slack on the 0.99 grid

std::string idf(const char* fmt, ...) {
    char buf[192];
    std::va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c) {
    std::vector<Complex> d(c.size() > 1 ? c.size() - 1 : 1, Complex{0.0, 0.0});
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

std::vector<Complex> section_coeffs(const NormalizedSeries& f, int n) {
    if (n < 2 || n > f.order())
        throw std::invalid_argument("section index must lie in [2, truncation degree]");
    const auto& c = f.coeffs();
    return std::vector<Complex>(c.begin(), c.begin() + n + 1);
}

// Margin for tolerance-equality checks, in units of the tolerance: 1 at an
// exact match, 0 right at the tolerance, negative beyond it. Keeps the
// uniform pass floor from silently loosening tight tolerances.
double tolerance_margin(double deviation, double tolerance) {
    return (tolerance - deviation) / tolerance;
}

double deg(double rad) { return rad * 180.0 / std::numbers::pi; }

void sort_reports(std::vector<VerificationReport>& reps) {
    std::sort(reps.begin(), reps.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.checkId < b.checkId; });
}

NormalizedSeries member_for(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                            double alpha, int order) {
    return random_member(GAlphaSpec(alpha), HerglotzSpec::from_seed(derive_seed(seed, stream, index)),
                         order);
}

}  // namespace

VerificationReport make_report(std::string checkId, double worstMargin, Complex witness,
                               std::map<std::string, double> parameters) {
    VerificationReport rep;
    rep.checkId = std::move(checkId);
    rep.worstMargin = worstMargin;
    rep.pass = worstMargin > kPassFloor;
    rep.witness = witness;
    rep.parameters = std::move(parameters);
    return rep;
}

VerificationReport check_convex_order(const NormalizedSeries& f, int n, double rho, double beta,
                                      const DiskGrid& grid) {
    if (!(grid.maxRadius <= rho && rho < 1.0))
        throw std::invalid_argument("check_convex_order: need grid.maxRadius <= rho < 1");
    const auto sn = section_coeffs(f, n);
    const auto snp = derivative_coeffs(sn);
    const auto snpp = derivative_coeffs(snp);
    double margin = kInf;
    Complex witness{0.0, 0.0};
    std::map<std::string, double> params{{"n", double(n)}, {"rho", rho}, {"beta", beta}};
    bool vanished = false;
    grid.for_each_point([&](Complex z) {
        if (vanished) return;
        const Complex d = horner(snp, z);
        if (std::abs(d) < kVanishTol) {
            vanished = true;
            witness = z;
            return;
        }
        const double v = (1.0 + z * horner(snpp, z) / d).real() - beta;
        if (v < margin) {
            margin = v;
            witness = z;
        }
    });
    if (vanished) {
        params["vanishing"] = 1.0;
        return make_report(idf("convex-order/n=%02d", n), -1.0, witness, std::move(params));
    }
    return make_report(idf("convex-order/n=%02d", n), margin, witness, std::move(params));
}

VerificationReport check_starlike_order(const NormalizedSeries& f, int n, double rho, double beta,
                                        const DiskGrid& grid) {
    if (!(grid.maxRadius <= rho && rho < 1.0))
        throw std::invalid_argument("check_starlike_order: need grid.maxRadius <= rho < 1");
    const auto sn = section_coeffs(f, n);
    const auto snp = derivative_coeffs(sn);
    double margin = kInf;
    Complex witness{0.0, 0.0};
    std::map<std::string, double> params{{"n", double(n)}, {"rho", rho}, {"beta", beta}};
    bool vanished = false;
    grid.for_each_point([&](Complex z) {
        if (vanished) return;
        const Complex s = horner(sn, z);
        if (std::abs(s) < kVanishTol) {
            vanished = true;
            witness = z;
            return;
        }
        const double v = (z * horner(snp, z) / s).real() - beta;
        if (v < margin) {
            margin = v;
            witness = z;
        }
    });
    if (vanished) {
        params["vanishing"] = 1.0;
        return make_report(idf("starlike-order/n=%02d", n), -1.0, witness, std::move(params));
    }
    return make_report(idf("starlike-order/n=%02d", n), margin, witness, std::move(params));
}

VerificationReport check_ctc_order(const NormalizedSeries& f, int n, double rho, double beta,
                                   const DiskGrid& grid) {
    if (!(grid.maxRadius <= rho && rho < 1.0))
        throw std::invalid_argument("check_ctc_order: need grid.maxRadius <= rho < 1");
    const auto sn = section_coeffs(f, n);
    const auto snp = derivative_coeffs(sn);
    double margin = kInf;
    Complex witness{0.0, 0.0};
    grid.for_each_point([&](Complex z) {
        const double v = horner(snp, z).real() - beta;
        if (v < margin) {
            margin = v;
            witness = z;
        }
    });
    return make_report(idf("ctc-order/n=%02d", n), margin, witness,
                       {{"n", double(n)}, {"rho", rho}, {"beta", beta}});
}

double empirical_property_radius(const NormalizedSeries& f, int n, Property property, double beta,
                                 double radialStep) {
    if (!(radialStep > 0.0 && radialStep <= 0.01))
        throw std::invalid_argument("empirical_property_radius: radialStep must lie in (0, 0.01]");
    constexpr int kAngles = 256;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const auto sn = section_coeffs(f, n);
    const auto snp = derivative_coeffs(sn);
    const auto snpp = derivative_coeffs(snp);

    const auto circle_ok = [&](double r) {
        for (int j = 0; j < kAngles; ++j) {
            const double th = kTwoPi * j / kAngles;
            const Complex z{r * std::cos(th), r * std::sin(th)};
            double v = 0.0;
            switch (property) {
                case Property::ConvexOrder: {
                    const Complex d = horner(snp, z);
                    if (std::abs(d) < kVanishTol) return false;
                    v = (1.0 + z * horner(snpp, z) / d).real() - beta;
                    break;
                }
                case Property::StarlikeOrder: {
                    const Complex s = horner(sn, z);
                    if (std::abs(s) < kVanishTol) return false;
                    v = (z * horner(snp, z) / s).real() - beta;
                    break;
                }
                case Property::CloseToConvexOrder:
                    v = horner(snp, z).real() - beta;
                    break;
            }
            if (!(v > kPassFloor)) return false;
        }
        return true;
    };

    double last = 0.0;
    for (int k = 1;; ++k) {
        const double r = k * radialStep;
        if (!(r < 1.0)) break;
        if (!circle_ok(r)) break;
        last = r;
    }
    return last;
}

VerificationReport coefficient_check(const NormalizedSeries& f, double alpha, int maxIndex) {
    if (maxIndex < 2) throw std::invalid_argument("coefficient_check: maxIndex must be >= 2");
    double margin = kInf;
    Complex witness{0.0, 0.0};
    int worstK = 2;
    const int hi = std::min(maxIndex, f.order());
    for (int k = 2; k <= hi; ++k) {
        const double m = coefficient_bound(alpha, k) - std::abs(f.coeff(k));
        if (m < margin) {
            margin = m;
            witness = f.coeff(k);
            worstK = k;
        }
    }
    return make_report("coefficient-check", margin, witness,
                       {{"alpha", alpha}, {"maxIndex", double(maxIndex)}, {"worstK", double(worstK)}});
}

VerificationReport coefficient_bound_suite(double alpha, int seedCount, int order,
                                           std::uint64_t seed) {
    if (seedCount < 1) throw std::invalid_argument("coefficient_bound_suite: seedCount must be >= 1");
    double margin = kInf;
    Complex witness{0.0, 0.0};
    double worstSeedIndex = 0.0, worstK = 2.0;
    for (int i = 0; i < seedCount; ++i) {
        const auto f = member_for(seed, kStreamCoeffs, static_cast<std::uint64_t>(i), alpha, order);
        const auto rep = coefficient_check(f, alpha, order);
        if (rep.worstMargin < margin) {
            margin = rep.worstMargin;
            witness = rep.witness;
            worstSeedIndex = static_cast<double>(i);
            worstK = rep.parameters.at("worstK");
        }
    }
    return make_report(idf("coeffs/bound-suite/alpha=%.2f", alpha), margin, witness,
                       {{"alpha", alpha},
                        {"seedCount", double(seedCount)},
                        {"order", double(order)},
                        {"worstSeedIndex", worstSeedIndex},
                        {"worstK", worstK}});
}

VerificationReport rogosinski_suite(const NormalizedSeries& f, int order) {
    const ComplexSeries b = reciprocal_z_over_f(f, order);
    const double capAbs = 1.0 / std::sqrt(3.0);
    double margin = kInf;
    Complex witness{0.0, 0.0};
    double worstN = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= order; ++n) {
        const double bn = std::abs(b.coeff(n));
        sum += bn * bn;
        const double mSum = (1.0 - std::pow(0.25, n)) / 3.0 - sum;
        if (mSum < margin) {
            margin = mSum;
            witness = b.coeff(n);
            worstN = n;
        }
        const double mAbs = capAbs - bn;
        if (mAbs < margin) {
            margin = mAbs;
            witness = b.coeff(n);
            worstN = n;
        }
    }
    return make_report("rogosinski-check", margin, witness,
                       {{"order", double(order)}, {"worstN", worstN}});
}

VerificationReport section_ratio_suite(const NormalizedSeries& f, int n, const DiskGrid& grid) {
    const auto sn = section_coeffs(f, n);
    const auto& fc = f.coeffs();
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    double margin = kInf;
    Complex witness{0.0, 0.0};
    double skipped = 0.0;
    for (int i = 1; i <= grid.radiusCount; ++i) {
        const double r = grid.radiusAt(i);
        const double bound = section_ratio_bound(n, r);
        for (int j = 0; j < grid.angleCount; ++j) {
            const double th = kTwoPi * j / grid.angleCount;
            const Complex z{r * std::cos(th), r * std::sin(th)};
            const Complex fz = horner(fc, z);
            if (std::abs(fz) < 1e-12) {
                skipped += 1.0;
                continue;
            }
            const double v = bound - std::abs(horner(sn, z) / fz - 1.0);
            if (v < margin) {
                margin = v;
                witness = z;
            }
        }
    }
    return make_report(idf("section-ratio/n=%02d", n), margin, witness,
                       {{"n", double(n)}, {"skipped", skipped}});
}

VerificationReport monotonicity_check(const MonotonicityTarget& target) {
    constexpr double h = 1e-5;
    double margin = kInf;
    Complex witness{0.0, 0.0};
    const bool inAlpha = target.parameterName == "alpha";
    if (!inAlpha && target.parameterName != "beta")
        throw std::invalid_argument("monotonicity_check: parameter must be alpha or beta");
    for (double a : target.alphaGrid) {
        for (double x : target.secondGrid) {
            double diff;
            if (inAlpha) {
                diff = (aux_psi(target.psiIndex, a + h, x) - aux_psi(target.psiIndex, a - h, x)) /
                       (2.0 * h);
            } else {
                diff = (aux_psi(target.psiIndex, a, x + h) - aux_psi(target.psiIndex, a, x - h)) /
                       (2.0 * h);
            }
            const double m = -diff;  // positive when the curve is decreasing
            if (m < margin) {
                margin = m;
                witness = Complex{a, x};
            }
        }
    }
    return make_report(idf("monotonicity/psi%02d-%s", target.psiIndex, target.parameterName.c_str()),
                       margin, witness, {{"psi", double(target.psiIndex)}});
}

std::vector<MonotonicityTarget> default_monotonicity_targets() {
    std::vector<double> alphas;
    for (int i = 1; i <= 10; ++i) alphas.push_back(0.1 * i);
    std::vector<double> betas;
    for (int i = 0; i < 9; ++i) betas.push_back(0.05 + 0.1 * i);
    std::vector<double> rhosWide;
    for (int i = 1; i <= 18; ++i) rhosWide.push_back(0.05 * i);  // up to 0.90
    std::vector<double> rhosMid;
    for (int i = 1; i <= 12; ++i) rhosMid.push_back(0.05 * i);  // up to 0.60,
                                                                // inside psi4's pole-free range
    std::vector<MonotonicityTarget> targets;
    for (int idx : {1, 2, 5, 6, 9, 10}) targets.push_back({idx, "beta", alphas, betas});
    for (int idx : {3, 7, 8, 11}) targets.push_back({idx, "alpha", alphas, rhosWide});
    targets.push_back({4, "alpha", alphas, rhosMid});
    return targets;
}

std::vector<VerificationReport> monotonicity_suite(const std::vector<MonotonicityTarget>& targets) {
    std::vector<VerificationReport> reps;
    reps.reserve(targets.size());
    for (const auto& t : targets) reps.push_back(monotonicity_check(t));
    sort_reports(reps);
    return reps;
}

// ---------------------------------------------------------------------------
// suite drivers
// ---------------------------------------------------------------------------

namespace {

struct MembershipSweep {
    double worst;  // max Re(1 + z f''/f') - (1 + alpha/2)
    Complex witness;
};

MembershipSweep membership_sweep(const NormalizedSeries& f, double alpha, const DiskGrid& grid) {
    const auto fp = derivative_coeffs(f.coeffs());
    const auto fpp = derivative_coeffs(fp);
    const double cap = 1.0 + alpha / 2.0;
    MembershipSweep out{-kInf, {0.0, 0.0}};
    grid.for_each_point([&](Complex z) {
        const Complex d = horner(fp, z);
        const double v = (std::abs(d) <= 1e-12) ? kInf  // vanishing derivative: treat as violation
                                                : (1.0 + z * horner(fpp, z) / d).real() - cap;
        if (v > out.worst) {
            out.worst = v;
            out.witness = z;
        }
    });
    return out;
}

}  // namespace

std::vector<VerificationReport> suite_coeffs(std::uint64_t seed) {
    std::vector<VerificationReport> reps;
    reps.push_back(coefficient_bound_suite(1.0, 100, 32, seed));

    for (double alpha : {0.25, 0.5, 1.0}) {
        double maxDev = 0.0;
        Complex witness{0.0, 0.0};
        double worstN = 2.0;
        for (int n = 2; n <= 8; ++n) {
            const auto f = extremal_function(alpha, n, 16);
            const double dev = std::abs(std::abs(f.coeff(n)) - coefficient_bound(alpha, n));
            if (dev > maxDev || n == 2) {
                maxDev = std::max(maxDev, dev);
                witness = f.coeff(n);
                worstN = n;
            }
        }
        reps.push_back(make_report(idf("coeffs/extremal-attainment/alpha=%.2f", alpha),
                                   tolerance_margin(maxDev, 1e-12), witness,
                                   {{"alpha", alpha}, {"worstN", worstN}, {"maxDev", maxDev}}));
    }

    for (double alpha : {0.25, 0.5, 1.0}) {
        double margin = kInf;
        Complex witness{0.0, 0.0};
        double worstSeedIndex = 0.0;
        double escalated = 0.0;
        for (int i = 0; i < 4; ++i) {
            const auto f = member_for(seed, kStreamMembership, static_cast<std::uint64_t>(i), alpha,
                                      kMembershipOrder);
            auto sweep = membership_sweep(f, alpha, DiskGrid::standard());
            if (!(-sweep.worst > kPassFloor)) {  // re-check failures on the fine grid
                sweep = membership_sweep(f, alpha, DiskGrid::fine());
                escalated += 1.0;
            }
            const double m = -sweep.worst;
            if (m < margin) {
                margin = m;
                witness = sweep.witness;
                worstSeedIndex = static_cast<double>(i);
            }
        }
        std::map<std::string, double> params{{"alpha", alpha},
                                             {"members", 4.0},
                                             {"order", double(kMembershipOrder)},
                                             {"worstSeedIndex", worstSeedIndex}};
        if (escalated > 0.0) params["escalated"] = escalated;
        reps.push_back(make_report(idf("coeffs/membership/alpha=%.2f", alpha), margin, witness,
                                   std::move(params)));
    }

    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> suite_radii() {
    std::vector<VerificationReport> reps;
    const ClassicalConstants classical = classical_constants();

    const RadiusResult ctc = solve_property_radius(1.0, 0.0, Property::CloseToConvexOrder);
    const RadiusResult convex = solve_property_radius(1.0, 0.0, Property::ConvexOrder);
    const RadiusResult starlike = solve_property_radius(1.0, 0.0, Property::StarlikeOrder);

    reps.push_back(make_report("radii/classical/ctc",
                               tolerance_margin(std::abs(ctc.rho - classical.rhoCtc), 1e-9),
                               {ctc.rho, 0.0}, {{"rho", ctc.rho}}));
    reps.push_back(make_report("radii/classical/convex",
                               tolerance_margin(std::abs(convex.rho - 0.3578), 5e-4),
                               {convex.rho, 0.0}, {{"rho", convex.rho}}));
    reps.push_back(make_report("radii/classical/starlike",
                               tolerance_margin(std::abs(starlike.rho - 0.5698), 5e-4),
                               {starlike.rho, 0.0}, {{"rho", starlike.rho}}));

    reps.push_back(make_report("radii/general-vs-classical/convex",
                               tolerance_margin(std::abs(convex.rho - classical.rhoConvex), 1e-9),
                               {convex.rho, classical.rhoConvex}, {}));
    reps.push_back(make_report("radii/general-vs-classical/starlike",
                               tolerance_margin(std::abs(starlike.rho - classical.rhoStarlike), 1e-9),
                               {starlike.rho, classical.rhoStarlike}, {}));
    reps.push_back(make_report("radii/general-vs-classical/ctc",
                               tolerance_margin(std::abs(ctc.rho - classical.rhoCtc), 1e-9),
                               {ctc.rho, classical.rhoCtc}, {}));

    {
        double maxDev = 0.0;
        Complex witness{0.0, 0.0};
        for (int i = 0; i < 1000; ++i) {
            const double r = 0.999 * i / 1000.0;
            const double dev = std::abs(ctc_indicator(1.0, 0.0, r) - (1.0 + std::log1p(-r)));
            if (dev > maxDev) {
                maxDev = dev;
                witness = {r, 0.0};
            }
        }
        reps.push_back(make_report("radii/ctc-identity", tolerance_margin(maxDev, 1e-12), witness,
                                   {{"maxDev", maxDev}}));
    }
    {
        double maxDev = 0.0;
        Complex witness{0.0, 0.0};
        for (int i = 0; i < 1000; ++i) {
            const double r = 0.999 * i / 1000.0;
            const double jcor = r - r * r + (2.0 - 3.0 * r) * std::log1p(-r);
            const double dev = std::abs(starlikeness_indicator(1.0, 0.0, r) + 2.0 * (2.0 - r) * jcor);
            if (dev > maxDev) {
                maxDev = dev;
                witness = {r, 0.0};
            }
        }
        reps.push_back(make_report("radii/starlike-identity", tolerance_margin(maxDev, 1e-10),
                                   witness, {{"maxDev", maxDev}}));
    }

    // grid monotonicity of the computed radius in beta (rows) and alpha (cols)
    for (Property prop : {Property::ConvexOrder, Property::StarlikeOrder, Property::CloseToConvexOrder}) {
        constexpr int nA = 10, nB = 10;
        double rho[nA][nB];
        bool ok = true;
        for (int ia = 0; ia < nA; ++ia) {
            for (int ib = 0; ib < nB; ++ib) {
                const RadiusResult res = solve_property_radius(0.1 * (ia + 1), 0.1 * ib, prop);
                ok = ok && res.converged;
                rho[ia][ib] = res.rho;
            }
        }
        double marginB = kInf, marginA = kInf;
        Complex witB{0, 0}, witA{0, 0};
        for (int ia = 0; ia < nA; ++ia)
            for (int ib = 0; ib + 1 < nB; ++ib) {
                const double drop = rho[ia][ib] - rho[ia][ib + 1];
                if (drop < marginB) {
                    marginB = drop;
                    witB = {0.1 * (ia + 1), 0.1 * ib};
                }
            }
        for (int ib = 0; ib < nB; ++ib)
            for (int ia = 0; ia + 1 < nA; ++ia) {
                const double drop = rho[ia][ib] - rho[ia + 1][ib];
                if (drop < marginA) {
                    marginA = drop;
                    witA = {0.1 * (ia + 1), 0.1 * ib};
                }
            }
        if (!ok) marginB = marginA = -1.0;
        reps.push_back(make_report(idf("radii/monotone-beta/%s", property_name(prop)), marginB, witB, {}));
        reps.push_back(make_report(idf("radii/monotone-alpha/%s", property_name(prop)), marginA, witA, {}));
    }

    // converged brackets really straddle a sign change, and the auxiliary
    // psi curve agrees with the indicator root (psi = beta there)
    for (Property prop : {Property::ConvexOrder, Property::StarlikeOrder, Property::CloseToConvexOrder}) {
        double marginSign = kInf, maxPsiDev = 0.0;
        Complex witSign{0, 0}, witPsi{0, 0};
        const int psiIndex = prop == Property::ConvexOrder ? 4
                             : prop == Property::StarlikeOrder ? 8
                                                               : 11;
        for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
            for (double beta : {0.0, 0.3, 0.6}) {
                const RadiusResult res = solve_property_radius(alpha, beta, prop);
                const auto ind = [&](double r) {
                    switch (prop) {
                        case Property::ConvexOrder: return convexity_indicator(alpha, beta, r);
                        case Property::StarlikeOrder: return starlikeness_indicator(alpha, beta, r);
                        default: return ctc_indicator(alpha, beta, r);
                    }
                };
                const double signOk =
                    (res.converged && ind(res.bracketLow) * ind(res.bracketHigh) <= 0.0) ? 1.0 : -1.0;
                if (signOk < marginSign) {
                    marginSign = signOk;
                    witSign = {alpha, beta};
                }
                const double psiDev = std::abs(aux_psi(psiIndex, alpha, res.rho) - beta);
                if (psiDev > maxPsiDev) {
                    maxPsiDev = psiDev;
                    witPsi = {alpha, beta};
                }
            }
        }
        reps.push_back(make_report(idf("radii/bracket-sign/%s", property_name(prop)), marginSign,
                                   witSign, {}));
        reps.push_back(make_report(idf("radii/psi-consistency/%s", property_name(prop)),
                                   tolerance_margin(maxPsiDev, 1e-8), witPsi,
                                   {{"psi", double(psiIndex)}, {"maxDev", maxPsiDev}}));
    }

    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> suite_tails(std::uint64_t seed) {
    std::vector<VerificationReport> reps;
    constexpr int kMembers = 20;
    constexpr int kOrder = kDefaultOrder;
    constexpr int kNMin = 2, kNMax = 12;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const DiskGrid grid = DiskGrid::standard();

    const double alphas[3] = {0.25, 0.5, 1.0};
    for (int ai = 0; ai < 3; ++ai) {
        const double alpha = alphas[ai];
        double margin[3] = {kInf, kInf, kInf};
        Complex witness[3];
        double worstSeed[3] = {0, 0, 0}, worstN[3] = {0, 0, 0};

        for (int mi = 0; mi < kMembers; ++mi) {
            const auto f = member_for(seed, kStreamTails, static_cast<std::uint64_t>(ai * 100 + mi),
                                      alpha, kOrder);
            const auto& a = f.coeffs();
            for (int i = 1; i <= grid.radiusCount; ++i) {
                const double r = grid.radiusAt(i);
                const double b0 = tail_abs_bound(alpha, r);
                const double b1 = tail_deriv_bound(alpha, r);
                const double b2 = tail_second_deriv_bound(alpha, r);
                for (int j = 0; j < grid.angleCount; ++j) {
                    const double th = kTwoPi * j / grid.angleCount;
                    const Complex z{r * std::cos(th), r * std::sin(th)};
                    // one pass over k: full sums plus prefix sums for n <= 12
                    Complex t0{0, 0}, t1{0, 0}, t2{0, 0};
                    Complex c0[kNMax + 1], c1[kNMax + 1], c2[kNMax + 1];
                    Complex zk2{1.0, 0.0};  // z^{k-2}
                    Complex zk1 = z;        // z^{k-1}
                    Complex zk = z * z;     // z^k
                    for (int k = 2; k <= kOrder; ++k) {
                        const Complex ak = a[static_cast<std::size_t>(k)];
                        t0 += ak * zk;
                        t1 += static_cast<double>(k) * ak * zk1;
                        t2 += static_cast<double>(k) * (k - 1.0) * ak * zk2;
                        if (k <= kNMax) {
                            c0[k] = t0;
                            c1[k] = t1;
                            c2[k] = t2;
                        }
                        zk2 = zk1;
                        zk1 = zk;
                        zk *= z;
                    }
                    for (int n = kNMin; n <= kNMax; ++n) {
                        const double m0 = b0 - std::abs(t0 - c0[n]);
                        const double m1 = b1 - std::abs(t1 - c1[n]);
                        const double m2 = b2 - std::abs(t2 - c2[n]);
                        if (m0 < margin[0]) { margin[0] = m0; witness[0] = z; worstSeed[0] = mi; worstN[0] = n; }
                        if (m1 < margin[1]) { margin[1] = m1; witness[1] = z; worstSeed[1] = mi; worstN[1] = n; }
                        if (m2 < margin[2]) { margin[2] = m2; witness[2] = z; worstSeed[2] = mi; worstN[2] = n; }
                    }
                }
            }
        }
        const char* kind[3] = {"abs", "deriv", "second"};
        for (int q = 0; q < 3; ++q) {
            reps.push_back(make_report(idf("tails/dominance/alpha=%.2f/%s", alpha, kind[q]),
                                       margin[q], witness[q],
                                       {{"alpha", alpha},
                                        {"members", double(kMembers)},
                                        {"worstSeedIndex", worstSeed[q]},
                                        {"worstN", worstN[q]}}));
        }
    }

    // S1/S2 decreasing in n, against their closed-form oracles
    {
        double marginDec1 = kInf, marginDec2 = kInf, maxDevOr1 = 0.0, maxDevOr2 = 0.0;
        Complex wDec1{0, 0}, wDec2{0, 0}, wOr1{0, 0}, wOr2{0, 0};
        for (int ri = 1; ri <= 9; ++ri) {
            const double rho = 0.1 * ri;
            const double logTerm = std::log1p(-rho);
            double partial1 = 0.0;  // sum_{k=2}^{n} rho^k/(k(k-1))
            double partial2 = 0.0;  // sum_{k=1}^{n-1} rho^k/k
            double rp = rho;        // rho^k runner for partial2 (k=1) and partial1 (k)
            partial2 += rho;
            rp = rho * rho;
            double prev1 = 0.0, prev2 = 0.0;
            for (int n = 2; n <= 50; ++n) {
                partial1 += rp / (static_cast<double>(n) * (n - 1.0));
                const double v1 = s1_value(n, rho);
                const double v2 = s2_value(n, rho);
                const double o1 = rho + (1.0 - rho) * logTerm - partial1;
                const double o2 = -logTerm - partial2;
                const double d1 = std::abs(v1 - o1);
                const double d2 = std::abs(v2 - o2);
                if (d1 > maxDevOr1) { maxDevOr1 = d1; wOr1 = {double(n), rho}; }
                if (d2 > maxDevOr2) { maxDevOr2 = d2; wOr2 = {double(n), rho}; }
                if (n > 2) {
                    const double drop1 = prev1 - v1;
                    const double drop2 = prev2 - v2;
                    if (drop1 < marginDec1) { marginDec1 = drop1; wDec1 = {double(n), rho}; }
                    if (drop2 < marginDec2) { marginDec2 = drop2; wDec2 = {double(n), rho}; }
                }
                prev1 = v1;
                prev2 = v2;
                partial2 += rp / n;
                rp *= rho;
            }
        }
        reps.push_back(make_report("tails/s1-decreasing", marginDec1, wDec1, {}));
        reps.push_back(make_report("tails/s2-decreasing", marginDec2, wDec2, {}));
        reps.push_back(make_report("tails/s1-oracle", tolerance_margin(maxDevOr1, 1e-10), wOr1,
                                   {{"maxDev", maxDevOr1}}));
        reps.push_back(make_report("tails/s2-oracle", tolerance_margin(maxDevOr2, 1e-10), wOr2,
                                   {{"maxDev", maxDevOr2}}));
    }

    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> suite_sections(std::uint64_t seed) {
    std::vector<VerificationReport> reps;
    const ClassicalConstants classical = classical_constants();

    std::vector<std::pair<std::string, NormalizedSeries>> fixtures;
    for (int i = 0; i < 5; ++i)
        fixtures.emplace_back(idf("random-%02d", i),
                              member_for(seed, kStreamSections, static_cast<std::uint64_t>(i), 1.0,
                                         kDefaultOrder));
    fixtures.emplace_back("extremal-a100-n2", extremal_function(1.0, 2, kDefaultOrder));
    fixtures.emplace_back("extremal-a100-n3", extremal_function(1.0, 3, kDefaultOrder));
    fixtures.emplace_back("extremal-a100-n5", extremal_function(1.0, 5, kDefaultOrder));
    fixtures.emplace_back("extremal-a050-n2", extremal_function(0.5, 2, kDefaultOrder));
    fixtures.emplace_back("extremal-a025-n2", extremal_function(0.25, 2, kDefaultOrder));

    const DiskGrid ratioGrid{64, 256, 0.9};
    for (const auto& [fid, f] : fixtures) {
        double margin = kInf;
        Complex witness{0, 0};
        double worstN = 2, skipped = 0;
        for (int n = 2; n <= 8; ++n) {
            const auto rep = section_ratio_suite(f, n, ratioGrid);
            skipped += rep.parameters.at("skipped");
            if (rep.worstMargin < margin) {
                margin = rep.worstMargin;
                witness = rep.witness;
                worstN = n;
            }
        }
        reps.push_back(make_report(idf("sections/ratio/%s", fid.c_str()), margin, witness,
                                   {{"worstN", worstN}, {"skipped", skipped}}));
    }

    const double classicalOf[3] = {classical.rhoConvex, classical.rhoStarlike, classical.rhoCtc};
    const Property props[3] = {Property::ConvexOrder, Property::StarlikeOrder,
                               Property::CloseToConvexOrder};
    for (const auto& [fid, f] : fixtures) {
        for (int pi = 0; pi < 3; ++pi) {
            double margin = kInf;
            double worstN = 2, worstRadius = 0;
            for (int n = 2; n <= 12; ++n) {
                const double er = empirical_property_radius(f, n, props[pi], 0.0, 0.01);
                const double m = er - (classicalOf[pi] - 1e-2);
                if (m < margin) {
                    margin = m;
                    worstN = n;
                    worstRadius = er;
                }
            }
            reps.push_back(make_report(idf("sections/empirical/%s/%s", fid.c_str(),
                                           property_name(props[pi])),
                                       margin, {worstRadius, 0.0},
                                       {{"worstN", worstN}, {"classical", classicalOf[pi]}}));
        }
    }

    // spot checks of the sections on the two fixed disk radii
    const DiskGrid ctcGrid{64, 256, kCtcDiskRadius};
    const DiskGrid starGrid{64, 256, kStarlikeDiskRadius};
    for (const auto& [fid, f] : fixtures) {
        double margin = kInf;
        Complex witness{0, 0};
        double worstN = 17, escalated = 0;
        for (int n = 17; n <= 24; ++n) {
            auto rep = check_ctc_order(f, n, kCtcDiskRadius, 0.0, ctcGrid);
            if (!rep.pass) {
                rep = check_ctc_order(f, n, kCtcDiskRadius, 0.0, DiskGrid::fine(kCtcDiskRadius));
                escalated += 1;
            }
            if (rep.worstMargin < margin) {
                margin = rep.worstMargin;
                witness = rep.witness;
                worstN = n;
            }
        }
        std::map<std::string, double> params{{"worstN", worstN}};
        if (escalated > 0) params["escalated"] = escalated;
        reps.push_back(make_report(idf("sections/ctc-at-0.6321/%s", fid.c_str()), margin, witness,
                                   std::move(params)));
    }
    for (const auto& [fid, f] : fixtures) {
        double margin = kInf;
        Complex witness{0, 0};
        double worstN = 10, escalated = 0;
        for (int n = 10; n <= 16; ++n) {
            auto rep = check_starlike_order(f, n, kStarlikeDiskRadius, 0.0, starGrid);
            if (!rep.pass) {
                rep = check_starlike_order(f, n, kStarlikeDiskRadius, 0.0,
                                           DiskGrid::fine(kStarlikeDiskRadius));
                escalated += 1;
            }
            if (rep.worstMargin < margin) {
                margin = rep.worstMargin;
                witness = rep.witness;
                worstN = n;
            }
        }
        std::map<std::string, double> params{{"worstN", worstN}};
        if (escalated > 0) params["escalated"] = escalated;
        reps.push_back(make_report(idf("sections/starlike-at-0.5698/%s", fid.c_str()), margin,
                                   witness, std::move(params)));
    }

    // a section below the C_n threshold where the sequence argument is silent
    // (C_12 > 1) yet the grid condition still holds: bound not tight here
    {
        const auto& f = fixtures[0].second;
        const auto rep = check_ctc_order(f, 12, kCtcDiskRadius, 0.0, ctcGrid);
        reps.push_back(make_report("sections/ctc-below-threshold/random-00/n=12", rep.worstMargin,
                                   rep.witness,
                                   {{"n", 12.0}, {"bound_not_tight", 1.0}, {"cn", cn_value(12)}}));
    }

    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> suite_rogosinski(std::uint64_t seed) {
    std::vector<VerificationReport> reps;
    constexpr int kOrder = 32;
    {
        double margin = kInf;
        Complex witness{0, 0};
        double worstSeedIndex = 0, worstN = 1;
        for (int i = 0; i < 50; ++i) {
            const auto f = member_for(seed, kStreamRogosinski, static_cast<std::uint64_t>(i), 1.0,
                                      kDefaultOrder);
            const auto rep = rogosinski_suite(f, kOrder);
            if (rep.worstMargin < margin) {
                margin = rep.worstMargin;
                witness = rep.witness;
                worstSeedIndex = i;
                worstN = rep.parameters.at("worstN");
            }
        }
        reps.push_back(make_report("rogosinski/random-members", margin, witness,
                                   {{"members", 50.0},
                                    {"order", double(kOrder)},
                                    {"worstSeedIndex", worstSeedIndex},
                                    {"worstN", worstN}}));
    }
    {
        // f = z - z^2/2 has b_k = 2^{-k}: the subordination chain is tight
        std::vector<Complex> c(kOrder + 1);
        c[1] = 1.0;
        c[2] = -0.5;
        const NormalizedSeries f(std::move(c));
        const ComplexSeries b = reciprocal_z_over_f(f, kOrder);
        double maxDev = 0.0;
        double worstN = 1;
        double sum = 0.0;
        for (int n = 1; n <= kOrder; ++n) {
            const double bn = std::abs(b.coeff(n));
            sum += bn * bn;
            const double dev = std::abs((1.0 - std::pow(0.25, n)) / 3.0 - sum);
            if (dev > maxDev) {
                maxDev = dev;
                worstN = n;
            }
        }
        reps.push_back(make_report("rogosinski/equality-extremal", tolerance_margin(maxDev, 1e-12),
                                   {worstN, 0.0}, {{"order", double(kOrder)}, {"maxDev", maxDev}}));
    }
    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> suite_monotonicity() { return monotonicity_suite(default_monotonicity_targets()); }

std::vector<VerificationReport> suite_thresholds() {
    std::vector<VerificationReport> reps;
    const int nc = threshold_ctc();
    const int ns = threshold_starlike();
    reps.push_back(make_report("thresholds/ctc-n", 0.5 - std::abs(nc - 17), {double(nc), 0.0},
                               {{"n", double(nc)}}));
    reps.push_back(make_report("thresholds/starlike-n", 0.5 - std::abs(ns - 10), {double(ns), 0.0},
                               {{"n", double(ns)}}));

    const double sinCap = std::sin(kCtcAngleBudgetDeg * std::numbers::pi / 180.0);
    reps.push_back(make_report("thresholds/c16-above", cn_value(16) - sinCap, {cn_value(16), 0.0},
                               {{"cap", sinCap}}));
    reps.push_back(make_report("thresholds/c17-below", sinCap - cn_value(17), {cn_value(17), 0.0},
                               {{"cap", sinCap}}));
    reps.push_back(make_report("thresholds/e9-above-one", en_value(9) - 1.0, {en_value(9), 0.0}, {}));
    {
        const double e10 = en_value(10), f10 = fn_value(10);
        const double angle = deg(std::asin(e10)) + deg(std::asin(f10));
        reps.push_back(make_report("thresholds/e10-f10-angle", kStarAngleBudgetDeg - angle,
                                   {e10, f10}, {{"angleDeg", angle}}));
    }

    reps.push_back(make_report("thresholds/crosscheck/cn",
                               tolerance_margin(std::abs(kCnScale - recompute_cn_scale()), 1e-6),
                               {recompute_cn_scale(), 0.0},
                               {{"dev", std::abs(kCnScale - recompute_cn_scale())}}));
    reps.push_back(make_report("thresholds/crosscheck/en",
                               tolerance_margin(std::abs(kEnScale - recompute_en_scale()), 1e-6),
                               {recompute_en_scale(), 0.0},
                               {{"dev", std::abs(kEnScale - recompute_en_scale())}}));
    reps.push_back(make_report("thresholds/crosscheck/fn",
                               tolerance_margin(std::abs(kFnScale - recompute_fn_scale()), 1e-6),
                               {recompute_fn_scale(), 0.0},
                               {{"dev", std::abs(kFnScale - recompute_fn_scale())}}));
    {
        const bool stable = threshold_ctc_with_scale(recompute_cn_scale()) == nc &&
                            threshold_starlike_with_scales(recompute_en_scale(),
                                                           recompute_fn_scale()) == ns;
        reps.push_back(make_report("thresholds/stability", stable ? 1.0 : -1.0, {0, 0}, {}));
    }
    {
        double marginDrop = kInf;
        Complex wit{0, 0};
        for (int n = 2; n < 60; ++n) {
            for (double d : {cn_value(n) - cn_value(n + 1), en_value(n) - en_value(n + 1),
                             fn_value(n) - fn_value(n + 1)}) {
                if (d < marginDrop) {
                    marginDrop = d;
                    wit = {double(n), 0.0};
                }
            }
        }
        reps.push_back(make_report("thresholds/sequences-decreasing", marginDrop, wit, {}));
        const double residue = std::max({cn_value(100), en_value(100), fn_value(100)});
        reps.push_back(make_report("thresholds/sequences-vanish", tolerance_margin(residue, 1e-3),
                                   {residue, 0.0}, {{"residue", residue}}));
    }

    // figure-3 scan: nonincreasing, the n=3 closed form, and the flat plateau
    {
        std::vector<double> vals;
        for (int n = 2; n <= 60; ++n) vals.push_back(fig3_radius(n));
        double marginDrop = kInf, marginFlat = kInf, marginFloor = kInf;
        Complex wDrop{0, 0}, wFlat{0, 0}, wFloor{0, 0};
        const double floorVal = 1.0 - std::exp(-1.0) - 1e-12;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const int n = static_cast<int>(i) + 2;
            if (i + 1 < vals.size()) {
                const double d = vals[i] - vals[i + 1];
                if (d < marginDrop) { marginDrop = d; wDrop = {double(n), 0.0}; }
            }
            if (n >= 17) {
                const double m = tolerance_margin(std::abs(vals[i] - kCtcDiskRadius), 1e-3);
                if (m < marginFlat) { marginFlat = m; wFlat = {double(n), vals[i]}; }
            }
            const double mf = vals[i] - floorVal;
            if (mf < marginFloor) { marginFloor = mf; wFloor = {double(n), vals[i]}; }
        }
        reps.push_back(make_report("thresholds/fig3-monotone", marginDrop, wDrop, {}));
        reps.push_back(make_report("thresholds/fig3-n3",
                                   tolerance_margin(std::abs(fig3_radius(3) - (std::sqrt(3.0) - 1.0)),
                                                    1e-9),
                                   {fig3_radius(3), 0.0}, {}));
        reps.push_back(make_report("thresholds/fig3-flat-n17", marginFlat, wFlat, {}));
        reps.push_back(make_report("thresholds/fig3-floor", marginFloor, wFloor, {}));
    }

    sort_reports(reps);
    return reps;
}

std::vector<VerificationReport> run_suite(std::string_view name, std::uint64_t seed) {
    std::vector<VerificationReport> reps;
    const auto append = [&reps](std::vector<VerificationReport> more) {
        reps.insert(reps.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    };
    if (name == "all") {
        append(suite_coeffs(seed));
        append(suite_radii());
        append(suite_tails(seed));
        append(suite_sections(seed));
        append(suite_rogosinski(seed));
        append(suite_monotonicity());
        append(suite_thresholds());
    } else if (name == "coeffs") {
        append(suite_coeffs(seed));
    } else if (name == "radii") {
        append(suite_radii());
    } else if (name == "tails") {
        append(suite_tails(seed));
    } else if (name == "sections") {
        append(suite_sections(seed));
    } else if (name == "rogosinski") {
        append(suite_rogosinski(seed));
    } else if (name == "monotonicity") {
        append(suite_monotonicity());
    } else if (name == "thresholds") {
        append(suite_thresholds());
    } else {
        throw std::invalid_argument("unknown suite: " + std::string(name));
    }
    sort_reports(reps);
    return reps;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

}  // namespace secradii
