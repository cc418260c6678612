// Command-line surface: radius queries, (alpha, beta) tables, figure data,
// bound evaluation, threshold computation, and the verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secradii/bounds.hpp"
#include "secradii/classg.hpp"
#include "secradii/radii.hpp"
#include "secradii/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace secradii;

std::string fmt10(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double checked_alpha(double alpha, bool exploratory) {
    if (!(alpha > 0.0)) throw UsageError("alpha must be > 0");
    if (alpha > 1.0) {
        if (!exploratory) throw UsageError("alpha must lie in (0,1]; pass --exploratory to lift the cap");
        std::cerr << "warning: alpha > 1 is outside the guaranteed range (0,1]\n";
    }
    return alpha;
}

double checked_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) throw UsageError("beta must lie in [0,1)");
    return beta;
}

ordered_json radius_json(double alpha, double beta, Property prop, double tol) {
    const RadiusResult res = solve_property_radius(alpha, beta, prop, tol);
    ordered_json j;
    j["query"] = {{"alpha", alpha}, {"beta", beta}, {"property", property_name(prop)}};
    j["result"] = {{"rho", res.rho}, {"residual", res.residual}, {"converged", res.converged}};
    j["meta"] = {{"tol", tol}, {"scanStep", 1e-3}, {"version", kVersion}};
    return j;
}

std::string table_csv(Property prop, double aMin, double aMax, double aStep, double bMin,
                      double bMax, double bStep, bool exploratory) {
    if (!(aStep > 0.0) || !(bStep > 0.0)) throw UsageError("steps must be > 0");
    std::string csv = "alpha,beta,rho,residual,converged\n";
    for (int i = 0;; ++i) {
        // clamp accumulated grid values so alpha-max 1.0 can't drift past the cap
        const double alpha = std::min(aMin + i * aStep, aMax);
        if (aMin + i * aStep > aMax + aStep * 1e-9) break;
        checked_alpha(alpha, exploratory);
        for (int k = 0;; ++k) {
            const double beta = std::min(bMin + k * bStep, bMax);
            if (bMin + k * bStep > bMax + bStep * 1e-9) break;
            checked_beta(beta);
            const RadiusResult res = solve_property_radius(alpha, beta, prop);
            csv += fmt10(alpha) + "," + fmt10(beta) + "," + fmt10(res.rho) + "," +
                   fmt10(res.residual) + "," + (res.converged ? "true" : "false") + "\n";
        }
    }
    return csv;
}

std::string figure_csv(int id) {
    std::string csv;
    if (id == 1 || id == 2) {
        csv = id == 1 ? "alpha,beta,psi2\n" : "alpha,beta,psi6\n";
        const int psi = id == 1 ? 2 : 6;
        for (double beta : {0.0, 0.2, 0.4, 0.6, 0.8}) {
            for (int i = 1; i <= 20; ++i) {
                const double alpha = std::min(i * 0.05, 1.0);
                csv += fmt10(alpha) + "," + fmt10(beta) + "," + fmt10(aux_psi(psi, alpha, beta)) + "\n";
            }
        }
    } else if (id == 3) {
        csv = "n,radius\n";
        for (int n = 2; n <= 40; ++n) csv += std::to_string(n) + "," + fmt10(fig3_radius(n)) + "\n";
    } else {
        throw UsageError("figure id must be 1, 2 or 3");
    }
    return csv;
}

ordered_json bounds_json(int n, double alpha, double rho) {
    if (n < 2) throw UsageError("n must be >= 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw UsageError("alpha must lie in (0,1]");
    if (!(rho >= 0.0 && rho <= 1.0 - 1e-9)) throw UsageError("rho must lie in [0, 1-1e-9]");
    ordered_json j;
    j["n"] = n;
    j["alpha"] = alpha;
    j["rho"] = rho;
    j["tail_abs"] = tail_abs_bound(alpha, rho);
    j["tail_deriv"] = tail_deriv_bound(alpha, rho);
    j["tail_second_deriv"] = tail_second_deriv_bound(alpha, rho);
    j["s1"] = s1_value(n, rho);
    j["s2"] = s2_value(n, rho);
    return j;
}

ordered_json thresholds_json() {
    const int nc = threshold_ctc();
    const int ns = threshold_starlike();
    ordered_json j;
    j["ctc_n"] = nc;
    j["starlike_n"] = ns;
    j["c_at_ctc_n"] = cn_value(nc);
    j["e_at_starlike_n"] = en_value(ns);
    j["f_at_starlike_n"] = fn_value(ns);
    j["ctc_angle_budget_deg"] = kCtcAngleBudgetDeg;
    j["starlike_angle_budget_deg"] = kStarAngleBudgetDeg;
    return j;
}

std::string report_text(const std::vector<VerificationReport>& reports) {
    std::string text;
    int failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failed;
        text += r.pass ? "PASS  " : "FAIL  ";
        text += r.checkId + "  margin=" + fmt10(r.worstMargin) + "  witness=" +
                fmt10(r.witness.real()) + "," + fmt10(r.witness.imag());
        for (const auto& [k, v] : r.parameters) text += "  " + k + "=" + fmt10(v);
        text += "\n";
    }
    text += "total=" + std::to_string(reports.size()) + " failed=" + std::to_string(failed) + "\n";
    return text;
}

ordered_json report_json(const std::string& suite, std::uint64_t seed,
                         const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json p = ordered_json::object();
        for (const auto& [k, v] : r.parameters) p[k] = v;
        arr.push_back({{"checkId", r.checkId},
                       {"pass", r.pass},
                       {"worstMargin", r.worstMargin},
                       {"witness", {r.witness.real(), r.witness.imag()}},
                       {"parameters", p}});
    }
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["allPass"] = all_pass(reports);
    j["reports"] = arr;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radii of convexity, starlikeness and close-to-convexity for sections of "
                 "functions convex in one direction"};
    app.require_subcommand(1);
    app.fallthrough();

    bool exploratory = false;
    std::string outputPath;
    app.add_flag("--exploratory", exploratory, "lift the alpha <= 1 cap (prints a warning)");
    app.add_option("-o,--output", outputPath, "write output to a file instead of stdout");

    // radius
    auto* radius = app.add_subcommand("radius", "least positive root of the property indicator");
    double rAlpha = 1.0, rBeta = 0.0, rTol = 1e-12;
    std::string rProp;
    bool rJson = false;
    radius->add_option("--alpha", rAlpha, "class parameter alpha")->required();
    radius->add_option("--beta", rBeta, "order beta in [0,1)")->required();
    radius->add_option("--property", rProp, "convex|starlike|ctc")->required();
    radius->add_option("--tol", rTol, "bisection tolerance (default 1e-12)");
    radius->add_flag("--json", rJson, "JSON output (default)");

    // table
    auto* table = app.add_subcommand("table", "CSV of radii over an (alpha, beta) grid");
    std::string tProp;
    double aMin = 0.1, aMax = 1.0, aStep = 0.1, bMin = 0.0, bMax = 0.9, bStep = 0.1;
    table->add_option("--property", tProp, "convex|starlike|ctc")->required();
    table->add_option("--alpha-min", aMin)->required();
    table->add_option("--alpha-max", aMax)->required();
    table->add_option("--alpha-step", aStep)->required();
    table->add_option("--beta-min", bMin)->required();
    table->add_option("--beta-max", bMax)->required();
    table->add_option("--beta-step", bStep)->required();

    // figure
    auto* figure = app.add_subcommand("figure", "CSV data behind the survey figures");
    int figId = 3;
    figure->add_option("--id", figId, "1 (psi2), 2 (psi6) or 3 (section radius scan)")->required();

    // bounds
    auto* boundsCmd = app.add_subcommand("bounds", "tail bounds and S1/S2 values as JSON");
    int bN = 2;
    double bAlpha = 1.0, bRho = 0.5;
    boundsCmd->add_option("--n", bN, "section index n >= 2")->required();
    boundsCmd->add_option("--alpha", bAlpha, "class parameter alpha in (0,1]")->required();
    boundsCmd->add_option("--rho", bRho, "radius rho in [0, 1-1e-9]")->required();

    // thresholds
    auto* thresholds = app.add_subcommand("thresholds", "minimal n for the printed disk radii");
    bool thJson = false;
    thresholds->add_flag("--json", thJson, "JSON output (default)");

    // verify
    auto* verify = app.add_subcommand("verify", "run desk-scale verification suites");
    std::string suite = "all";
    std::uint64_t seed = kDefaultSeed;
    bool vJson = false;
    verify->add_option("--suite", suite,
                       "all|coeffs|radii|tails|sections|rogosinski|monotonicity|thresholds");
    verify->add_option("--seed", seed, "global 64-bit seed (default 42)");
    verify->add_flag("--json", vJson, "machine-readable JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help();
        return 1;
    }

    try {
        if (radius->parsed()) {
            const Property prop = property_from_name(rProp);
            checked_alpha(rAlpha, exploratory);
            checked_beta(rBeta);
            if (!(rTol > 0.0)) throw UsageError("tol must be > 0");
            return emit(radius_json(rAlpha, rBeta, prop, rTol).dump(2) + "\n", outputPath);
        }
        if (table->parsed()) {
            return emit(table_csv(property_from_name(tProp), aMin, aMax, aStep, bMin, bMax, bStep,
                                  exploratory),
                        outputPath);
        }
        if (figure->parsed()) {
            return emit(figure_csv(figId), outputPath);
        }
        if (boundsCmd->parsed()) {
            return emit(bounds_json(bN, bAlpha, bRho).dump(2) + "\n", outputPath);
        }
        if (thresholds->parsed()) {
            return emit(thresholds_json().dump(2) + "\n", outputPath);
        }
        if (verify->parsed()) {
            const auto reports = run_suite(suite, seed);
            const std::string text =
                vJson ? report_json(suite, seed, reports).dump(2) + "\n" : report_text(reports);
            const int rc = emit(text, outputPath);
            if (rc != 0) return rc;
            return all_pass(reports) ? 0 : 2;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.get_subcommands().front()->help();
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.get_subcommands().front()->help();
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
