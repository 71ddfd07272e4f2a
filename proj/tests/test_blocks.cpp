#include <doctest.h>

#include <stdexcept>

#include "hypack/blocks.hpp"
#include "oracle.hpp"

using namespace hypack;

namespace {

struct Shape {
    int vertices;
    int valence;
    bool orientable;
    int genus;
    int boundary;
};

void check_block(const TriangulatedComplex& c, Shape s) {
    auto classes = vertex_classes(c);
    CHECK(static_cast<int>(classes.size()) == s.vertices);
    for (const auto& v : classes) {
        CHECK(v.boundary);
        CHECK(v.triangle_valence == s.valence);
    }
    auto g = genus(c);
    CHECK(g.orientable == s.orientable);
    CHECK(g.genus == s.genus);
    CHECK(g.boundary == s.boundary);
    for (const auto& bc : boundary_components(c)) CHECK(bc.vertex_count * s.boundary == s.vertices);
}

}  // namespace

TEST_CASE("one-holed orientable blocks") {
    for (int g = 1; g <= 4; ++g) {
        check_block(sigma_g1(g, 1), {1, 12 * g - 3, true, g, 1});
        check_block(sigma_g1(g, 2), {2, 6 * g, true, g, 1});
        check_block(sigma_g1(g, 3), {3, 4 * g + 1, true, g, 1});
    }
}

TEST_CASE("two-holed orientable blocks") {
    for (int g = 0; g <= 4; ++g) {
        check_block(sigma_g2(g, 1), {2, 6 * g + 3, true, g, 2});
        check_block(sigma_g2(g, 2), {4, 3 * g + 3, true, g, 2});
        check_block(sigma_g2(g, 3), {6, 2 * g + 3, true, g, 2});
    }
    CHECK(annulus(2) == sigma_g2(0, 2));
}

TEST_CASE("holed tori and spheres") {
    for (int b = 1; b <= 5; ++b) {
        check_block(torus_b_holed(b, 1), {b, 9, true, 1, b});
        check_block(torus_b_holed(b, 2), {2 * b, 6, true, 1, b});
        check_block(torus_b_holed(b, 3), {3 * b, 5, true, 1, b});
    }
    check_block(three_holed_sphere(), {6, 4, true, 0, 3});
    check_block(four_holed_sphere(), {12, 4, true, 0, 4});
    check_block(six_holed_sphere(), {12, 5, true, 0, 6});
}

TEST_CASE("non-orientable blocks") {
    check_block(three_holed_rp2(), {6, 5, false, 1, 3});
    for (int g = 1; g <= 4; ++g) {
        check_block(upsilon_g1(g, 1), {1, 6 * g - 3, false, g, 1});
        if (g > 1) check_block(upsilon_g1(g, 2), {2, 3 * g, false, g, 1});
        check_block(upsilon_g1(g, 3), {3, 2 * g + 1, false, g, 1});
    }
    for (int b = 1; b <= 5; ++b) check_block(klein_b_holed(b), {b, 9, false, 2, b});
    CHECK_THROWS_AS(upsilon_g1(1, 2), std::invalid_argument);
}

TEST_CASE("unbalanced fan") {
    auto f = upsilon_fan(1);
    auto v = vertex_classes(f);
    REQUIRE(v.size() == 2);
    CHECK(v[0].triangle_valence + v[1].triangle_valence == 6);
    CHECK(v[0].triangle_valence != v[1].triangle_valence);
}

TEST_CASE("marked blocks") {
    for (int l = 1; l <= 5; ++l) {
        for (auto [family, large] : {std::pair{BlockFamily::MarkedX, 5 * l - 3}, {BlockFamily::MarkedY, 5 * l - 1},
                                     {BlockFamily::MarkedZ, 5 * l}}) {
            auto c = build({family, l, 1});
            CHECK(c.marked_count() == (family == BlockFamily::MarkedZ ? 2 * l : l));
            CHECK(validate_marked(c).ok);
            CHECK(orientability(c));
            for (const auto& v : vertex_classes(c)) {
                if (v.marked) {
                    CHECK(v.triangle_valence == 1);
                } else if (v.triangle_valence != 1) {
                    CHECK(v.triangle_valence == large);
                }
            }
        }
        CHECK(boundary_components(marked_X(l)).front().vertex_count == 1);
        CHECK(boundary_components(marked_Y(l)).front().vertex_count == 2);
        CHECK(boundary_components(marked_Z(l)).front().vertex_count == 2);
    }
}

TEST_CASE("build dispatch and expected valence agree") {
    for (int g = 1; g <= 3; ++g)
        for (int v = 1; v <= 3; ++v) {
            BlockSpec s{BlockFamily::SigmaG1, g, v};
            CHECK(vertex_classes(build(s)).front().triangle_valence == expected_valence(s));
        }
    CHECK_THROWS_AS(build({BlockFamily::ThreeHoledSphere, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build({BlockFamily::SigmaG2, 0, 1}), std::invalid_argument);
    CHECK(to_string(BlockFamily::KleinBHoled) == "KleinBHoled");
}

TEST_CASE("blocks agree with the union-find oracle") {
    for (const auto& c : {sigma_g1(2, 3), sigma_g2(1, 3), four_holed_sphere(), three_holed_rp2(), klein_b_holed(4),
                          marked_Z(3), upsilon_g1(3, 2)})
        CHECK(union_find_vertices(c) == library_vertices(c));
}
