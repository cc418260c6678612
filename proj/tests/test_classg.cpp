#include <doctest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "secradii/classg.hpp"

using namespace secradii;

namespace {
double cdist(Complex a, Complex b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GAlphaSpec(0.0), std::invalid_argument);
    CHECK_THROWS_AS(GAlphaSpec(-0.5), std::invalid_argument);
    CHECK_NOTHROW(GAlphaSpec(2.0));  // construction allows alpha > 1; radius queries cap it

    CHECK_THROWS_AS(HerglotzSpec({0.5, 0.4}, {0.0, 1.0}), std::invalid_argument);   // sum != 1
    CHECK_THROWS_AS(HerglotzSpec({1.5, -0.5}, {0.0, 1.0}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(HerglotzSpec({1.0}, {0.0, 1.0}), std::invalid_argument);        // lengths
    CHECK_THROWS_AS(HerglotzSpec({1.0}, {7.0}), std::invalid_argument);             // angle range
    CHECK_THROWS_AS(HerglotzSpec(std::vector<double>(9, 1.0 / 9), std::vector<double>(9, 0.0)),
                    std::invalid_argument);

    for (std::uint64_t seed : {0ull, 1ull, 42ull, 987654321ull}) {
        const HerglotzSpec h = HerglotzSpec::from_seed(seed);
        CHECK(h.atom_count() >= 1);
        CHECK(h.atom_count() <= 8);
        double sum = 0;
        for (double w : h.weights) sum += w;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("extremal_derivative") {
    const ComplexSeries d = extremal_derivative(1.0, 2, 4);
    CHECK(d.coeff(0) == Complex{1, 0});
    CHECK(d.coeff(1) == Complex{-1, 0});
    CHECK(d.coeff(2) == Complex{0, 0});

    const ComplexSeries d3 = extremal_derivative(1.0, 3, 6);
    const double expect[7] = {1.0, 0.0, -0.5, 0.0, -0.125, 0.0, -0.0625};
    for (int i = 0; i <= 6; ++i) CHECK(cdist(d3.coeff(i), {expect[i], 0}) <= 1e-15);

    const ComplexSeries tiny = extremal_derivative(1e-9, 4, 9);
    CHECK(tiny.coeff(0) == Complex{1, 0});
    for (int i = 1; i <= 9; ++i) CHECK(std::abs(tiny.coeff(i)) <= 1e-9);

    CHECK_THROWS_AS(extremal_derivative(0.0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(extremal_derivative(1.0, 1, 4), std::invalid_argument);
}

TEST_CASE("extremal_function attains the coefficient bound") {
    const NormalizedSeries f = extremal_function(1.0, 2, 8);
    CHECK(cdist(f.coeff(2), {-0.5, 0}) <= 1e-16);

    const NormalizedSeries g = extremal_function(0.5, 3, 8);
    CHECK(std::abs(std::abs(g.coeff(3)) - 1.0 / 12.0) <= 1e-14);

    const NormalizedSeries h = extremal_function(1.0, 5, 16);
    CHECK(h.coeff(2) == Complex{0, 0});
    CHECK(h.coeff(3) == Complex{0, 0});
    CHECK(h.coeff(4) == Complex{0, 0});

    for (double alpha : {0.25, 0.5, 1.0}) {
        for (int n = 2; n <= 8; ++n) {
            const NormalizedSeries e = extremal_function(alpha, n, 16);
            CHECK(std::abs(std::abs(e.coeff(n)) - coefficient_bound(alpha, n)) <= 1e-12);
        }
    }
}

TEST_CASE("coefficient_bound") {
    CHECK(coefficient_bound(1.0, 2) == 0.5);
    CHECK(std::abs(coefficient_bound(1.0, 3) - 1.0 / 6.0) <= 1e-16);
    CHECK(std::abs(coefficient_bound(0.5, 10) - 0.5 / 90.0) <= 1e-16);
    CHECK_THROWS_AS(coefficient_bound(1.0, 1), std::invalid_argument);
}

TEST_CASE("random_member single atom recovers the n=2 extremal") {
    const HerglotzSpec h({1.0}, {0.0}, 0);
    const NormalizedSeries f = random_member(GAlphaSpec(1.0), h, 16);
    CHECK(cdist(f.coeff(2), {-0.5, 0}) <= 1e-12);
    for (int k = 3; k <= 16; ++k) CHECK(std::abs(f.coeff(k)) <= 1e-12);
}

TEST_CASE("random_member alpha -> 0 degenerates to the identity") {
    const NormalizedSeries f = random_member(GAlphaSpec(1e-12), HerglotzSpec::from_seed(5), 16);
    for (int k = 2; k <= 16; ++k) CHECK(std::abs(f.coeff(k)) <= 1e-11);
}

TEST_CASE("random_member is bitwise reproducible") {
    const HerglotzSpec h = HerglotzSpec::from_seed(1234);
    const NormalizedSeries f1 = random_member(GAlphaSpec(0.75), h, 48);
    const NormalizedSeries f2 = random_member(GAlphaSpec(0.75), HerglotzSpec::from_seed(1234), 48);
    REQUIRE(f1.coeffs().size() == f2.coeffs().size());
    CHECK(std::memcmp(f1.coeffs().data(), f2.coeffs().data(),
                      f1.coeffs().size() * sizeof(Complex)) == 0);
}

TEST_CASE("random_member coefficients obey the class bound") {
    for (double alpha : {0.25, 1.0}) {
        for (std::uint64_t i = 0; i < 10; ++i) {
            const auto f = random_member(GAlphaSpec(alpha),
                                         HerglotzSpec::from_seed(derive_seed(42, 1, i)), 32);
            for (int k = 2; k <= 32; ++k)
                CHECK(std::abs(f.coeff(k)) <= coefficient_bound(alpha, k) + 1e-9);
        }
    }
}

TEST_CASE("membership_margin") {
    std::vector<Complex> idc(5);
    idc[1] = 1.0;
    const double midentity = membership_margin(NormalizedSeries(idc), 1.0, DiskGrid(4, 16, 0.9));
    CHECK(std::abs(midentity - (-0.5)) <= 1e-14);

    // Koebe violates the condition: at z = 0.5 the margin is 13/3 - 3/2
    const double mkoebe = membership_margin(oracles::koebe(64), 1.0, DiskGrid(2, 8, 0.5));
    CHECK(mkoebe >= 13.0 / 3.0 - 1.5 - 1e-8);

    // exact polynomial member z - z^2/2 stays strictly inside up to 0.99
    const double mext = membership_margin(oracles::half_extremal(), 1.0, DiskGrid::standard());
    CHECK(mext < 0.0);
    CHECK(mext >= -0.5);
}

TEST_CASE("membership_margin of generated members on the default grid") {
    for (std::uint64_t i = 0; i < 2; ++i) {
        const auto f = random_member(GAlphaSpec(1.0),
                                     HerglotzSpec::from_seed(derive_seed(42, 5, i)), 1024);
        CHECK(membership_margin(f, 1.0, DiskGrid::standard()) < 0.0);
    }
    // a coarser truncation is already conclusive away from the boundary
    const auto g = random_member(GAlphaSpec(0.5), HerglotzSpec::from_seed(7), 64);
    CHECK(membership_margin(g, 0.5, DiskGrid(16, 64, 0.5)) < 0.0);
}

TEST_CASE("derive_seed separates streams") {
    CHECK(derive_seed(42, 1, 0) != derive_seed(42, 2, 0));
    CHECK(derive_seed(42, 1, 0) != derive_seed(42, 1, 1));
    CHECK(derive_seed(42, 3, 9) == derive_seed(42, 3, 9));
    CHECK(splitmix64(1) != splitmix64(2));
}
