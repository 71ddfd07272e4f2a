#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hypack/bounds.hpp"
#include "hypack/hyptrig.hpp"

using namespace hypack;

TEST_CASE("closed-case solve matches the closed form") {
    double r = solve_vor({-2, 0}, 1);
    CHECK(r == doctest::Approx(1.7191071206150517).epsilon(1e-12));
    CHECK(std::cosh(r) == doctest::Approx(1 / (2 * std::sin(kPi / 18))).epsilon(1e-12));
    // chi = -1, k = 2: 6 - 6chi/k = 9
    CHECK(std::cosh(solve_vor({-1, 0}, 2)) == doctest::Approx(1 / (2 * std::sin(kPi / 9))).epsilon(1e-12));
}

TEST_CASE("solver residual is tiny with cusps") {
    for (int n : {1, 2, 5})
        for (int k : {1, 2, 7}) {
            SurfaceSignature s{-3, n};
            double r = solve_vor(s, k);
            CHECK(std::abs(f_k(r, s, k) - 2 * kPi) < 1e-11);
        }
}

TEST_CASE("bound ordering") {
    for (int k = 1; k <= 6; ++k) {
        double closed = solve_vor({-2, 0}, k);
        CHECK(solve_vor({-2, 3}, k) < closed);
        CHECK(closed <= boroczky_bound(-2, k) + 1e-14);
        CHECK(boroczky_bound(-2, k) < naive_bound(-2, k));
    }
    CHECK(std::cosh(naive_bound(-2, 1)) == doctest::Approx(3.0));
}

TEST_CASE("valences are exact rationals") {
    auto v = valences({-2, 2}, 2);
    CHECK(v.i == Rational(9));
    CHECK(v.j == Rational(2));
    auto w = valences({-1, 1}, 2);
    CHECK(w.i == Rational(15, 2));
    CHECK(w.j == Rational(1));
    CHECK_FALSE(w.integral());
    CHECK(Rational(6, -4).str() == "-3/2");
}

TEST_CASE("attainability classes") {
    CHECK(attainability({-2, 2}, 2) == Attainability::AttainedByConstruction);
    CHECK(attainability({-2, 0}, 5) == Attainability::NotAttained);
    CHECK(attainability({-1, 1}, 2) == Attainability::NecessaryConditionFails);
    CHECK(to_string(Attainability::Unknown) == "Unknown");
}

TEST_CASE("invalid signatures") {
    CHECK_FALSE(valid_signature({0, 0}));
    CHECK_FALSE(valid_signature({-1, -1}));
    CHECK_THROWS_AS(solve_vor({1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve_vor({-1, 0}, 0), std::invalid_argument);
}

TEST_CASE("tolerance override") {
    CHECK(solver_tolerance() == doctest::Approx(1e-12));
    setenv("HYPACK_TOLERANCE", "1e-6", 1);
    CHECK(solver_tolerance() == doctest::Approx(1e-6));
    unsetenv("HYPACK_TOLERANCE");
}
