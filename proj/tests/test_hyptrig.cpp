#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hypack/hyptrig.hpp"

using namespace hypack;

TEST_CASE("alpha and beta at the closed-form radii") {
    // cosh r = 1/(2 sin(pi/18)) makes alpha = pi/9
    double r = std::acosh(1 / (2 * std::sin(kPi / 18)));
    CHECK(alpha(r) == doctest::Approx(kPi / 9).epsilon(1e-14));
    CHECK(beta(std::acosh(2.0)) == doctest::Approx(kPi / 6).epsilon(1e-14));
    CHECK(alpha(0) == doctest::Approx(kPi / 3));
    CHECK(beta(0) == doctest::Approx(kPi / 2));
}

TEST_CASE("alpha and beta decrease to zero") {
    double prev_a = alpha(0.01), prev_b = beta(0.01);
    for (double r = 0.02; r < 20; r *= 1.3) {
        CHECK(alpha(r) < prev_a);
        CHECK(beta(r) < prev_b);
        prev_a = alpha(r);
        prev_b = beta(r);
    }
    CHECK(alpha(40) < 1e-15);
}

TEST_CASE("inverse functions round-trip") {
    for (double r : {0.1, 0.5, 1.0, 1.7191, 3.0, 6.0}) {
        CHECK(inv_alpha(alpha(r)) == doctest::Approx(r).epsilon(1e-10));
        CHECK(inv_beta(beta(r)) == doctest::Approx(r).epsilon(1e-10));
    }
}

TEST_CASE("triangle areas") {
    double r = 1.2;
    auto a = triangle_areas(r);
    CHECK(a.equilateral == doctest::Approx(kPi - 3 * alpha(r)));
    CHECK(a.horocyclic == doctest::Approx(kPi - 2 * beta(r)));
    CHECK(a.horocyclic > a.equilateral);
    CHECK_THROWS_AS(triangle_areas(0), std::domain_error);
}

TEST_CASE("disk and surface areas") {
    CHECK(disk_area(1.0) == doctest::Approx(4 * kPi * std::sinh(0.5) * std::sinh(0.5)));
    CHECK(disk_area(1e-4) == doctest::Approx(kPi * 1e-8).epsilon(1e-6));
    CHECK(surface_area(-2) == doctest::Approx(4 * kPi));
    CHECK_THROWS_AS(surface_area(0), std::domain_error);
}

TEST_CASE("thick radius and loop length") {
    CHECK(thick_radius(0.5) == doctest::Approx(std::asinh((1 - std::exp(-1.0)) / 2)));
    CHECK_THROWS_AS(thick_radius(1.0), std::domain_error);
    CHECK_THROWS_AS(thick_radius(0.0), std::domain_error);
    CHECK(quad_loop_length(0.2, 1.0) == doctest::Approx(2 * std::asinh(std::cosh(1.0) * std::sinh(0.1))));
    CHECK(yamada_constant() == doctest::Approx(std::asinh(2 / std::sqrt(3.0))));
}
