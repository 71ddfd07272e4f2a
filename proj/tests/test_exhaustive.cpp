#include <doctest.h>

#include <array>
#include <numeric>
#include <vector>

#include "hypack/complex.hpp"

using namespace hypack;

namespace {

// Every gluing of `plain` unmarked triangles and `cusps` monogons (side 1 on side 2, corner 2 marked)
// into a connected surface with exactly `k` unmarked vertices, each with i unmarked and j marked-triangle
// corners. Corner classes are screened by union-find; survivors go through the library.
long count_packings(int plain, int cusps, int k, int i, int j, bool orientable) {
    const int tris = plain + cusps;
    std::vector<Slot> slots;
    for (int t = 0; t < plain; ++t)
        for (int s = 0; s < 3; ++s) slots.push_back({t, s});
    for (int h = 0; h < cusps; ++h) slots.push_back({plain + h, 0});
    const int free_slots = static_cast<int>(slots.size()), edges = free_slots / 2;
    std::vector<int> marked(plain, -1);
    marked.resize(tris, 2);
    std::vector<int> mate(free_slots, -1);
    long found = 0;

    std::vector<int> parent(3 * tris);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto glue = [&](Slot a, Slot b, bool reversed) {
        int a0 = 3 * a.tri + a.side, a1 = 3 * a.tri + (a.side + 1) % 3;
        int b0 = 3 * b.tri + b.side, b1 = 3 * b.tri + (b.side + 1) % 3;
        if (reversed) std::swap(b0, b1);
        parent[find(a0)] = find(b0);
        parent[find(a1)] = find(b1);
    };

    auto visit = [&](auto&& self) -> void {
        int x = 0;
        while (x < free_slots && mate[x] >= 0) ++x;
        if (x < free_slots) {
            for (int y = x + 1; y < free_slots; ++y)
                if (mate[y] < 0) {
                    mate[x] = y;
                    mate[y] = x;
                    self(self);
                    mate[x] = mate[y] = -1;
                }
            return;
        }
        std::vector<std::array<int, 2>> pairs;
        for (int a = 0; a < free_slots; ++a)
            if (mate[a] > a) pairs.push_back({a, mate[a]});
        for (int mask = 0; mask < (1 << edges); ++mask) {
            std::iota(parent.begin(), parent.end(), 0);
            for (int h = 0; h < cusps; ++h) glue({plain + h, 1}, {plain + h, 2}, true);
            for (int e = 0; e < edges; ++e) glue(slots[pairs[e][0]], slots[pairs[e][1]], (mask >> e) & 1);
            std::vector<int> size(3 * tris, 0), in_cusp(3 * tris, 0);
            for (int c = 0; c < 3 * tris; ++c) {
                ++size[find(c)];
                if (c / 3 >= plain) ++in_cusp[find(c)];
            }
            int classes = 0;
            bool ok = true;
            for (int c = 0; c < 3 * tris && ok; ++c) {
                if (find(c) != c) continue;
                ++classes;
                bool is_mark = c / 3 >= plain && c % 3 == 2 && size[c] == 1;
                if (!is_mark) ok = size[c] - in_cusp[c] == i && in_cusp[c] == j;
            }
            if (!ok || classes != k + cusps) continue;
            std::vector<Pairing> ps;
            for (int h = 0; h < cusps; ++h) ps.push_back({{plain + h, 1}, {plain + h, 2}, true});
            for (int e = 0; e < edges; ++e)
                ps.push_back({slots[pairs[e][0]], slots[pairs[e][1]], static_cast<bool>((mask >> e) & 1)});
            TriangulatedComplex c(tris, ps, marked);
            if (connected(c) && orientability(c) == orientable) ++found;
        }
    };
    visit(visit);
    return found;
}

}  // namespace

TEST_CASE("exhaustive search finds the one-vertex once-punctured packings") {
    CHECK(count_packings(3, 1, 1, 9, 2, false) == 7776);
    CHECK(count_packings(3, 1, 1, 9, 2, true) == 1296);
}

TEST_CASE("no two-vertex packing triangulation of the twice-punctured projective plane") {
    CHECK(count_packings(4, 2, 2, 6, 2, false) == 0);
    CHECK(count_packings(4, 2, 2, 6, 2, true) == 0);
}
