#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "secradii/bounds.hpp"
#include "secradii/verify.hpp"

using namespace secradii;

namespace {

NormalizedSeries padded_identity(int order = 16) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    return NormalizedSeries(std::move(c));
}

NormalizedSeries member(std::uint64_t index, double alpha = 1.0, int order = kDefaultOrder) {
    return random_member(GAlphaSpec(alpha), HerglotzSpec::from_seed(derive_seed(42, 3, index)),
                         order);
}

}  // namespace

TEST_CASE("make_report pass boundary") {
    CHECK(make_report("x", -0.5e-9, {0, 0}).pass);
    CHECK_FALSE(make_report("x", -1e-9, {0, 0}).pass);
    CHECK_FALSE(make_report("x", -1.0, {0, 0}).pass);
}

TEST_CASE("check_convex_order") {
    const auto idRep = check_convex_order(padded_identity(), 3, 0.99, 0.3, DiskGrid(4, 16, 0.99));
    CHECK(idRep.pass);
    CHECK(std::abs(idRep.worstMargin - 0.7) <= 1e-12);

    const auto extRep = check_convex_order(oracles::half_extremal(), 2, 0.3578, 0.0,
                                           DiskGrid(16, 64, 0.3578));
    CHECK(extRep.pass);

    // Koebe second section: the derivative zero at -1/4 sits inside 0.26
    const auto bad = check_convex_order(oracles::koebe_s2(), 2, 0.26, 0.0, DiskGrid::standard(0.26));
    CHECK_FALSE(bad.pass);

    CHECK_THROWS_AS(check_convex_order(padded_identity(), 2, 0.3, 0.0, DiskGrid(4, 16, 0.5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_convex_order(padded_identity(), 99, 0.9, 0.0, DiskGrid(4, 16, 0.9)),
                    std::invalid_argument);
}

TEST_CASE("check_starlike_order") {
    const auto idRep = check_starlike_order(padded_identity(), 4, 0.95, 0.5, DiskGrid(4, 16, 0.95));
    CHECK(idRep.pass);
    CHECK(std::abs(idRep.worstMargin - 0.5) <= 1e-12);

    for (std::uint64_t i = 0; i < 3; ++i) {
        const auto f = member(i);
        for (int n : {2, 7, 12}) {
            const auto rep = check_starlike_order(f, n, 0.56979685849224107, 0.0,
                                                  DiskGrid(16, 64, 0.56979685849224107));
            CHECK(rep.pass);
        }
    }

    // the section z(1 - 1.25 z) vanishes at z = 0.8, hit exactly by a 9-radius grid
    std::vector<Complex> vc(8);
    vc[1] = 1.0;
    vc[2] = -1.25;
    const auto vrep = check_starlike_order(NormalizedSeries(std::move(vc)), 2, 0.9, 0.0,
                                           DiskGrid(9, 8, 0.9));
    CHECK_FALSE(vrep.pass);
    CHECK(vrep.parameters.count("vanishing") == 1);
    CHECK(std::abs(vrep.witness.real() - 0.8) <= 1e-12);
}

TEST_CASE("check_ctc_order") {
    const auto idRep = check_ctc_order(padded_identity(), 5, 0.99, 0.25, DiskGrid(4, 16, 0.99));
    CHECK(idRep.pass);
    CHECK(std::abs(idRep.worstMargin - 0.75) <= 1e-12);

    const auto extRep = check_ctc_order(oracles::half_extremal(), 2, 0.95, 0.0, DiskGrid(8, 32, 0.95));
    CHECK(extRep.pass);
    CHECK(std::abs(extRep.worstMargin - (1.0 - 0.95)) <= 1e-12);

    for (std::uint64_t i = 0; i < 2; ++i) {
        const auto rep = check_ctc_order(member(i), 17, kCtcDiskRadius, 0.0,
                                         DiskGrid(16, 64, kCtcDiskRadius));
        CHECK(rep.pass);
    }
}

TEST_CASE("empirical_property_radius") {
    const auto id = padded_identity();
    CHECK(empirical_property_radius(id, 3, Property::ConvexOrder, 0.0, 0.01) == doctest::Approx(0.99).epsilon(1e-12));
    CHECK(empirical_property_radius(id, 3, Property::CloseToConvexOrder, 0.9, 0.01) ==
          doctest::Approx(0.99).epsilon(1e-12));

    // z + 2z^2: Re s' crosses zero on |z| = 1/4, the starlike quotient too;
    // the convexity criterion already fails at 1/8
    const auto k2 = oracles::koebe_s2();
    CHECK(std::abs(empirical_property_radius(k2, 2, Property::CloseToConvexOrder, 0.0, 0.01) - 0.25) <= 0.011);
    CHECK(std::abs(empirical_property_radius(k2, 2, Property::StarlikeOrder, 0.0, 0.01) - 0.25) <= 0.011);
    CHECK(std::abs(empirical_property_radius(k2, 2, Property::ConvexOrder, 0.0, 0.01) - 0.125) <= 0.011);

    CHECK(std::abs(empirical_property_radius(oracles::half_extremal(), 2, Property::ConvexOrder, 0.0,
                                             0.01) -
                   0.5) <= 0.011);

    // at beta = 1/2, Re s2' = 1 - 4r crosses the order line at r = 1/8
    CHECK(std::abs(empirical_property_radius(k2, 2, Property::CloseToConvexOrder, 0.5, 0.01) -
                   0.125) <= 0.011);

    CHECK_THROWS_AS(empirical_property_radius(id, 3, Property::ConvexOrder, 0.0, 0.02),
                    std::invalid_argument);
    CHECK_THROWS_AS(empirical_property_radius(id, 3, Property::ConvexOrder, 0.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("coefficient checks") {
    const auto good = coefficient_check(oracles::half_extremal(), 1.0, 8);
    CHECK(good.pass);  // equality at k=2 gives margin ~0

    // corrupted member: a_2 doubled breaks the bound with witness k=2
    std::vector<Complex> cc(9);
    cc[1] = 1.0;
    cc[2] = -1.0;
    const auto bad = coefficient_check(NormalizedSeries(std::move(cc)), 1.0, 8);
    CHECK_FALSE(bad.pass);
    CHECK(bad.parameters.at("worstK") == 2.0);

    const auto suite = coefficient_bound_suite(1.0, 10, 32, 42);
    CHECK(suite.pass);
    CHECK(suite.parameters.at("seedCount") == 10.0);
}

TEST_CASE("rogosinski_suite") {
    const auto idRep = rogosinski_suite(padded_identity(32), 16);
    CHECK(idRep.pass);

    const auto eq = rogosinski_suite(oracles::half_extremal(32), 24);
    CHECK(eq.pass);
    CHECK(std::abs(eq.worstMargin) <= 1e-12);  // geometric b_k make the bound tight

    for (std::uint64_t i = 0; i < 5; ++i) {
        CHECK(rogosinski_suite(member(i, 1.0), 32).pass);
    }
}

TEST_CASE("section_ratio_suite") {
    const auto idRep = section_ratio_suite(padded_identity(), 4, DiskGrid(8, 32, 0.9));
    CHECK(idRep.pass);
    CHECK(idRep.parameters.at("skipped") == 0.0);

    for (int n : {2, 5}) {
        CHECK(section_ratio_suite(oracles::half_extremal(64), n, DiskGrid(32, 128, 0.9)).pass);
    }
    for (int n = 2; n <= 8; ++n) {
        CHECK(section_ratio_suite(member(1), n, DiskGrid(16, 64, 0.9)).pass);
    }
}

TEST_CASE("monotonicity") {
    for (const auto& rep : monotonicity_suite(default_monotonicity_targets())) {
        CHECK(rep.pass);
        CHECK(rep.worstMargin > 0.0);  // strict decrease on the default grids
    }
    CHECK_THROWS_AS(monotonicity_check({1, "rho", {0.5}, {0.5}}), std::invalid_argument);
}

TEST_CASE("suite reports are canonical and deterministic") {
    const auto a = run_suite("thresholds", 42);
    const auto b = run_suite("thresholds", 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].checkId == b[i].checkId);
        CHECK(a[i].worstMargin == b[i].worstMargin);
        CHECK(a[i].witness == b[i].witness);
        CHECK(a[i].pass == b[i].pass);
        if (i > 0) CHECK(a[i - 1].checkId < a[i].checkId);
    }

    const auto r1 = suite_rogosinski(42);
    const auto r2 = suite_rogosinski(42);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].worstMargin == r2[i].worstMargin);
    }

    CHECK_THROWS_AS(run_suite("bogus", 42), std::invalid_argument);
}

TEST_CASE("thresholds suite passes") {
    const auto reps = run_suite("thresholds", 42);
    CHECK(all_pass(reps));
    bool sawCtcN = false;
    for (const auto& r : reps) {
        if (r.checkId == "thresholds/ctc-n") {
            sawCtcN = true;
            CHECK(r.parameters.at("n") == 17.0);
        }
    }
    CHECK(sawCtcN);
}

TEST_CASE("radii suite passes") { CHECK(all_pass(run_suite("radii", 42))); }

TEST_CASE("monotonicity suite passes") { CHECK(all_pass(run_suite("monotonicity", 42))); }
