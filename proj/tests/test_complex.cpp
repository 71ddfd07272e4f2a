#include <doctest.h>

#include <stdexcept>

#include "hypack/blocks.hpp"
#include "hypack/complex.hpp"
#include "oracle.hpp"

using namespace hypack;

namespace {

// Two triangles glued along all three sides, orientation-compatibly: a sphere.
TriangulatedComplex doubled_triangle() {
    return TriangulatedComplex(2, {{{0, 0}, {1, 0}, true}, {{0, 1}, {1, 2}, true}, {{0, 2}, {1, 1}, true}});
}

}  // namespace

TEST_CASE("construction rejects bad pairings") {
    CHECK_THROWS_AS(TriangulatedComplex(1, {{{0, 0}, {0, 0}, true}}), std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedComplex(2, {{{0, 0}, {1, 0}, true}, {{0, 0}, {1, 1}, true}}), std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedComplex(1, {{{0, 3}, {0, 1}, true}}), std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedComplex(1, {}, {3}), std::invalid_argument);
}

TEST_CASE("single triangle is a disk") {
    TriangulatedComplex t(1, {});
    CHECK(euler_characteristic(t) == 1);
    CHECK(vertex_classes(t).size() == 3);
    auto g = genus(t);
    CHECK(g.orientable);
    CHECK(g.genus == 0);
    CHECK(g.boundary == 1);
    auto bc = boundary_components(t);
    REQUIRE(bc.size() == 1);
    CHECK(bc[0].vertex_count == 3);
}

TEST_CASE("doubled triangle is a sphere with three vertices of valence two") {
    auto s = doubled_triangle();
    CHECK(euler_characteristic(s) == 2);
    auto v = vertex_classes(s);
    REQUIRE(v.size() == 3);
    for (const auto& x : v) CHECK(x.triangle_valence == 2);
    CHECK(orientability(s));
    CHECK(union_find_vertices(s) == library_vertices(s));
}

TEST_CASE("one-vertex closed surfaces") {
    auto t = closed_orientable_one_vertex(1);
    CHECK(euler_characteristic(t) == 0);
    CHECK(genus(t).genus == 1);
    auto k = closed_nonorientable_one_vertex(2);
    auto g = genus(k);
    CHECK_FALSE(g.orientable);
    CHECK(g.genus == 2);
    auto p = closed_nonorientable_one_vertex(3);
    CHECK(vertex_classes(p).front().triangle_valence == 12);
}

TEST_CASE("disconnected complexes") {
    auto u = disjoint_union(TriangulatedComplex(1, {}), TriangulatedComplex(1, {}));
    CHECK(component_count(u) == 2);
    CHECK_THROWS_AS(orientability(u), std::invalid_argument);
}

TEST_CASE("gluing two disks gives a sphere") {
    TriangulatedComplex t(1, {});
    auto s = glue(t, 0, t, 0);
    CHECK(s.free_slot_count() == 0);
    CHECK(euler_characteristic(s) == 2);
    CHECK(orientability(s));
    auto p = glue(t, 0, t, 0, 0, true);
    CHECK(euler_characteristic(p) == 2);
    CHECK(orientability(p));
}

TEST_CASE("glue offsets and reversal are honored") {
    auto a = annulus(3);
    // gluing the two ends of an annulus: orientation-preserving gives a torus
    auto torus = glue_self(a, 0, 1);
    auto gt = genus(torus);
    CHECK(gt.orientable);
    CHECK(gt.genus == 1);
    auto klein = glue_self(a, 0, 1, 0, true);
    auto gk = genus(klein);
    CHECK_FALSE(gk.orientable);
    CHECK(gk.genus == 2);
    CHECK_THROWS_AS(glue_self(a, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(glue(a, 0, annulus(2), 0), std::invalid_argument);
}

TEST_CASE("edge flip moves valence and keeps the surface") {
    auto s = closed_orientable_one_vertex(2);
    for (int id = 0; id < static_cast<int>(s.pairings().size()); ++id) {
        const auto& p = s.pairings()[id];
        if (p.a.tri == p.b.tri) continue;
        auto f = flip_edge(s, id);
        CHECK(euler_characteristic(f) == euler_characteristic(s));
        CHECK(orientability(f));
        CHECK(f.pairings().size() == s.pairings().size());
        CHECK(union_find_vertices(f) == library_vertices(f));
        auto back = flip_edge(flip_edge(f, id), id);
        CHECK(euler_characteristic(back) == -2);
    }
    CHECK_THROWS_AS(flip_edge(s, 999), std::invalid_argument);
}

TEST_CASE("flip changes the valence vector of a two-vertex surface") {
    auto s = upsilon_fan(2);
    auto before = vertex_classes(s);
    bool changed = false;
    for (int id = 0; id < static_cast<int>(s.pairings().size()); ++id) {
        const auto& p = s.pairings()[id];
        if (p.a.tri == p.b.tri) continue;
        auto after = vertex_classes(flip_edge(s, id));
        if (after.size() != before.size()) continue;
        for (size_t v = 0; v < after.size(); ++v)
            if (after[v].triangle_valence != before[v].triangle_valence) changed = true;
    }
    CHECK(changed);
}

TEST_CASE("canonical form is order independent") {
    auto s = doubled_triangle();
    TriangulatedComplex t(2, {{{1, 1}, {0, 2}, true}, {{1, 0}, {0, 0}, true}, {{0, 1}, {1, 2}, true}});
    CHECK(s.canonical() == t.canonical());
    CHECK_FALSE(s == t);
}

TEST_CASE("marked validation") {
    auto x = marked_X(3);
    auto m = validate_marked(x);
    CHECK(m.ok);
    CHECK(m.marked_vertices == 3);
    // a marked corner whose vertex also meets another triangle
    TriangulatedComplex bad(2, {{{0, 1}, {1, 0}, true}}, {2, -1});
    CHECK_FALSE(validate_marked(bad).ok);
}

TEST_CASE("boundary cycles follow the induced orientation") {
    auto t = torus_b_holed(3, 2);
    auto bcs = boundary_components(t);
    REQUIRE(bcs.size() == 3);
    for (const auto& bc : bcs) CHECK(bc.vertex_count == 2);
}
