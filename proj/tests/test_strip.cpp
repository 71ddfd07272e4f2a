#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hypack/hyptrig.hpp"
#include "hypack/strip.hpp"

using namespace hypack;

TEST_CASE("quadrilateral facts") {
    auto q = quadfacts(0.5, 1.0);
    CHECK(q.z == doctest::Approx(std::asinh(std::cosh(1.0) * std::sinh(0.25))));
    CHECK(q.theta > 0);
    CHECK(q.theta < kPi / 2);
    CHECK(std::pow(std::cosh(q.z) * std::sin(q.theta), 2) == doctest::Approx(std::pow(std::cosh(0.25), 2)));
    auto small = quadfacts(1e-9, 1.0);
    CHECK(small.z < 1e-8);
    CHECK(small.theta == doctest::Approx(kPi / 2).epsilon(1e-6));
}

TEST_CASE("non-separating length") {
    CHECK(nonsep_length({0.2, 1.0, 0.5}) == doctest::Approx(2 * 0.386484905898833).epsilon(1e-12));
    CHECK(nonsep_length({0.2, 1.0, 0.0}) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(nonsep_length({0.2, 1.0, 1.0}) > nonsep_length({0.2, 1.0, 0.5}));
    CHECK_THROWS_AS(nonsep_length({0.0, 1.0, 0.5}), std::domain_error);
}

TEST_CASE("separating length across the phase transition") {
    const double h = 1.0, star = phase_transition(h);
    CHECK(star == doctest::Approx(1.5438736658).epsilon(1e-9));
    SepParams p{0.1, 0.1, h, star};
    CHECK(sep_length(p) == doctest::Approx(sep_length_expanded(p)));
    for (double e : {0.3, 1.0, 1.5}) {
        SepParams q{0.1, 0.1, h, e};
        CHECK(sep_length_triangle(q) == doctest::Approx(sep_length_expanded(q)).epsilon(1e-12));
    }
    for (double e : {2.0, 3.0}) {
        SepParams q{0.1, 0.1, h, e};
        CHECK(sep_length_hexagon(q) == doctest::Approx(sep_length_expanded(q)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sep_length_triangle({0.1, 0.1, h, 2.0}), std::domain_error);
    CHECK_THROWS_AS(sep_length_hexagon({0.1, 0.1, h, 1.0}), std::domain_error);
    CHECK(sep_length({0.1, 0.1, h, 0.0}) == doctest::Approx(0.4));
}

TEST_CASE("separating length is symmetric and increasing") {
    double prev = 0;
    for (double e = 0.05; e < 4; e += 0.05) {
        double x = sep_length({0.2, 0.7, 0.8, e});
        CHECK(x == doctest::Approx(sep_length({0.7, 0.2, 0.8, e})).epsilon(1e-12));
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("solving for the width") {
    NonSepParams p{0.2, 1.0, 0};
    double target = nonsep_length({0.2, 1.0, 0.7});
    CHECK(solve_eps(target, p) == doctest::Approx(0.7).epsilon(1e-10));
    double e = solve_eps(0.5, NonSepParams{0.1, 1.0, 0});
    CHECK(std::abs(nonsep_length({0.1, 1.0, e}) - 0.5) < 1e-10);
    CHECK_THROWS_AS(solve_eps(0.1, NonSepParams{0.1, 1.0, 0}), std::domain_error);
    CHECK_THROWS_AS(solve_eps(0.05, NonSepParams{0.1, 1.0, 0}), std::domain_error);
    SepParams s{0.1, 0.2, 1.0, 0};
    double es = solve_eps(4.0, s);
    CHECK(std::abs(sep_length({0.1, 0.2, 1.0, es}) - 4.0) < 1e-10);
    CHECK_THROWS_AS(solve_eps(0.6, s), std::domain_error);
}
