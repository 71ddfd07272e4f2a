#include "hypack/blocks.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace hypack {

std::string to_string(BlockFamily f) {
    switch (f) {
        case BlockFamily::Annulus: return "Annulus";
        case BlockFamily::ThreeHoledSphere: return "ThreeHoledSphere";
        case BlockFamily::FourHoledSphere: return "FourHoledSphere";
        case BlockFamily::SixHoledSphere: return "SixHoledSphere";
        case BlockFamily::SigmaG1: return "SigmaG1";
        case BlockFamily::SigmaG2: return "SigmaG2";
        case BlockFamily::TorusBHoled: return "TorusBHoled";
        case BlockFamily::ThreeHoledRP2: return "ThreeHoledRP2";
        case BlockFamily::UpsilonG1: return "UpsilonG1";
        case BlockFamily::KleinBHoled: return "KleinBHoled";
        case BlockFamily::MarkedX: return "MarkedX";
        case BlockFamily::MarkedY: return "MarkedY";
        case BlockFamily::MarkedZ: return "MarkedZ";
    }
    return "?";
}

namespace {

// Triangles given by vertex labels in counterclockwise order. Sides shared by two
// triangles are glued by pair_shared; polygon sides are glued by identify.
class Builder {
public:
    int add(int a, int b, int c) {
        tris_.push_back({a, b, c});
        return static_cast<int>(tris_.size()) - 1;
    }

    void pair_shared() {
        std::map<std::pair<int, int>, std::vector<Slot>> by_edge;
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
            for (int s = 0; s < 3; ++s) {
                int u = tris_[t][s], v = tris_[t][(s + 1) % 3];
                by_edge[{std::min(u, v), std::max(u, v)}].push_back({t, s});
            }
        for (const auto& [key, slots] : by_edge) {
            if (slots.size() == 1) continue;
            if (slots.size() != 2) throw std::logic_error("label edge shared by more than two triangles");
            bool same_dir = tris_[slots[0].tri][slots[0].side] == tris_[slots[1].tri][slots[1].side];
            pair(slots[0], slots[1], !same_dir);
        }
    }

    int pair(Slot a, Slot b, bool reversed) {
        pairs_.push_back({a, b, reversed});
        return static_cast<int>(pairs_.size()) - 1;
    }

    // The unique unglued side joining labels u and v, and whether it runs u -> v.
    BoundaryEntry side(int u, int v) const {
        std::vector<BoundaryEntry> found;
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
            for (int s = 0; s < 3; ++s) {
                int a = tris_[t][s], b = tris_[t][(s + 1) % 3];
                if (!((a == u && b == v) || (a == v && b == u))) continue;
                if (used({t, s})) continue;
                found.push_back({{t, s}, a == u});
            }
        if (found.size() != 1) throw std::logic_error("polygon side lookup is ambiguous or missing");
        return found[0];
    }

    // Glue side u1->v1 to side u2->v2. Orientation-reversing in the polygon sense sends
    // u1 to v2; otherwise u1 goes to u2.
    int identify(int u1, int v1, int u2, int v2, bool orientation_reversing) {
        auto e1 = side(u1, v1);
        auto e2 = side(u2, v2);
        bool flag = orientation_reversing ? (e1.forward == e2.forward) : (e1.forward != e2.forward);
        return pair(e1.slot, e2.slot, flag);
    }

    // Reverse the corner order of triangles so every shared edge is traversed oppositely.
    void orient() {
        int n = static_cast<int>(tris_.size());
        std::vector<int> state(n, 0);
        std::map<std::pair<int, int>, std::vector<int>> by_edge;
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < 3; ++s) {
                int u = tris_[t][s], v = tris_[t][(s + 1) % 3];
                by_edge[{std::min(u, v), std::max(u, v)}].push_back(t);
            }
        auto has_directed = [&](int t, int u, int v) {
            for (int s = 0; s < 3; ++s)
                if (tris_[t][s] == u && tris_[t][(s + 1) % 3] == v) return true;
            return false;
        };
        for (int root = 0; root < n; ++root) {
            if (state[root]) continue;
            state[root] = 1;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int s = 0; s < 3; ++s) {
                    int u = tris_[t][s], v = tris_[t][(s + 1) % 3];
                    for (int o : by_edge[{std::min(u, v), std::max(u, v)}]) {
                        if (o == t) continue;
                        if (!state[o]) {
                            if (has_directed(o, u, v)) std::swap(tris_[o][1], tris_[o][2]);
                            state[o] = 1;
                            stack.push_back(o);
                        } else if (has_directed(o, u, v)) {
                            throw std::logic_error("label triangulation is not orientable");
                        }
                    }
                }
            }
        }
    }

    TriangulatedComplex build(std::vector<int> marked = {}) const {
        return TriangulatedComplex(static_cast<int>(tris_.size()), pairs_, std::move(marked));
    }

private:
    bool used(Slot s) const {
        for (const auto& p : pairs_)
            if (p.a == s || p.b == s) return true;
        return false;
    }

    std::vector<std::array<int, 3>> tris_;
    std::vector<Pairing> pairs_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

TriangulatedComplex flip_all(TriangulatedComplex c, const std::vector<int>& ids) {
    for (int id : ids) c = flip_edge(c, id);
    return c;
}

// Sigma_{g,1} polygon: vertices 0..4g, side i from i to i+1, side 4g is the boundary,
// subdivided by extra vertices for v = 2, 3. Returns pairing ids of the side classes,
// indexed by the smaller side.
TriangulatedComplex sigma_g1_flipped(int g, int v, int copies, bool lift_torus) {
    // copies/lift_torus only used for the torus cover: g == 1
    const int m = 4 * g + 1;
    const int stride = m + 2;
    Builder b;
    for (int c = 0; c < copies; ++c) {
        int o = c * stride;
        int w = o + m, x = o + m, y = o + m + 1;
        if (v == 1) {
            for (int i = 1; i + 1 < m; ++i) b.add(o, o + i, o + i + 1);
        } else if (v == 2) {
            for (int i = 0; i < m - 1; ++i) b.add(o + i, o + i + 1, w);
        } else {
            for (int i = 0; i < 2 * g; ++i) b.add(o + i, o + i + 1, y);
            for (int i = 2 * g; i < 4 * g; ++i) b.add(o + i, o + i + 1, x);
            b.add(o + 2 * g, x, y);
        }
    }
    b.pair_shared();
    // class_ids[i] lists the pairings of side class e_i ~ e_{i+2}, one per copy
    std::map<int, std::vector<int>> class_ids;
    for (int c = 0; c < copies; ++c) {
        int o = c * stride;
        for (int i = 0; i < 4 * g; ++i) {
            if (i % 4 > 1) continue;
            int target = lift_torus && i == 1 ? ((c + 1) % copies) * stride : o;
            int id = b.identify(o + i, o + i + 1, target + i + 2, target + i + 3, true);
            class_ids[i].push_back(id);
        }
    }
    TriangulatedComplex cx = b.build();
    std::vector<int> reps;
    for (int i = 0; i < 4 * g; ++i)
        if (i % 4 <= 1) reps.push_back(i);
    int flips = v == 1 ? 0 : v == 2 ? g : 2 * g;
    std::vector<int> ids;
    for (int r = 0; r < flips; ++r)
        for (int id : class_ids[reps[r]]) ids.push_back(id);
    return flip_all(cx, ids);
}

}  // namespace

TriangulatedComplex sigma_g1(int g, int v) {
    require(g >= 1, "sigma_g1: genus must be at least 1");
    require(v >= 1 && v <= 3, "sigma_g1: vertices per boundary must be 1, 2 or 3");
    return sigma_g1_flipped(g, v, 1, false);
}

TriangulatedComplex torus_b_holed(int b, int v) {
    require(b >= 1, "torus_b_holed: need at least one hole");
    require(v >= 1 && v <= 3, "torus_b_holed: vertices per boundary must be 1, 2 or 3");
    return sigma_g1_flipped(1, v, b, true);
}

TriangulatedComplex sigma_g2(int g, int v) {
    require(g >= 0, "sigma_g2: genus must be nonnegative");
    require(v >= 1 && v <= 3, "sigma_g2: vertices per boundary must be 1, 2 or 3");
    const int n = g + 1, N = 4 * n;
    auto P = [N](int i) { return ((i % N) + N) % N; };
    Builder b;
    if (v == 1) {
        for (int i = 1; i <= 2 * n - 2; ++i) b.add(i, i + 1, 2 * n);
        for (int j = 2 * n + 1; j <= 4 * n - 2; ++j) b.add(j, P(j + 1), 0);
        b.add(0, 1, 2 * n + 1);
        b.add(1, 2 * n, 2 * n + 1);
    } else if (v == 2) {
        const int w0 = N, w2 = N + 1;
        for (int i = 1; i <= 2 * n - 1; ++i) b.add(i, i + 1, w2);
        for (int j = 2 * n + 1; j <= 4 * n - 1; ++j) b.add(j, P(j + 1), w0);
        b.add(w0, 1, w2);
        b.add(w2, 2 * n + 1, w0);
    } else {
        const int u0 = N, w0 = N + 1, u2 = N + 2, w2 = N + 3;
        for (int i = 1; i <= n - 1; ++i) b.add(i, i + 1, w0);
        for (int i = n + 1; i <= 2 * n - 1; ++i) b.add(i, i + 1, u2);
        for (int i = 2 * n + 1; i <= 3 * n - 1; ++i) b.add(i, i + 1, w2);
        for (int i = 3 * n + 1; i <= 4 * n - 1; ++i) b.add(i, P(i + 1), u0);
        b.add(u0, 3 * n, P(3 * n + 1));
        b.add(u0, w2, 3 * n);
        b.add(u0, w0, w2);
        b.add(w0, u2, w2);
        b.add(w0, n, u2);
        b.add(n, n + 1, u2);
    }
    b.pair_shared();
    std::vector<int> cls(2 * n, -1);
    for (int k = 1; k < 2 * n; ++k) cls[k] = b.identify(k, k + 1, k + 2 * n, P(k + 2 * n + 1), true);
    std::vector<int> ids;
    if (v == 2)
        for (int k = 1; k <= n - 1; ++k) ids.push_back(cls[k]);
    if (v == 3)
        for (int k = 1; k < 2 * n; ++k)
            if (k != n) ids.push_back(cls[k]);
    return flip_all(b.build(), ids);
}

TriangulatedComplex annulus(int v) { return sigma_g2(0, v); }

TriangulatedComplex three_holed_sphere() {
    Builder b;
    b.add(0, 2, 4);
    b.add(0, 1, 2);
    b.add(2, 3, 4);
    b.add(4, 5, 0);
    b.add(7, 9, 11);
    b.add(7, 8, 9);
    b.add(9, 10, 11);
    b.add(11, 6, 7);
    b.pair_shared();
    for (int i = 0; i < 6; i += 2) b.identify(i, (i + 1) % 6, 6 + i, 6 + (i + 1) % 6, false);
    return b.build();
}

TriangulatedComplex four_holed_sphere() {
    // outer triangle A B C with holes t, l, r; each hole has three vertices
    enum { A, B, C, t0, t1, t2, l0, l1, l2, r0, r1, r2 };
    const int tris[16][3] = {
        {l1, r1, t0}, {t2, t1, A}, {t1, r1, t0}, {t0, l1, l2}, {t0, l2, t2}, {l2, t2, B},
        {t2, A, B},   {l2, B, l0}, {l0, B, C},   {l0, C, r0}, {l0, r0, l1}, {l1, r0, r1},
        {r0, C, r2},  {r2, C, A},  {r2, A, t1},  {r1, r2, t1},
    };
    Builder b;
    for (const auto& t : tris) b.add(t[0], t[1], t[2]);
    b.orient();
    b.pair_shared();
    return b.build();
}

namespace {

void dodecagon(Builder& b, int o) {
    const int tris[10][3] = {{2, 3, 4}, {2, 4, 5}, {1, 2, 5}, {1, 5, 9},  {5, 6, 9},
                             {6, 7, 8}, {6, 8, 9}, {1, 9, 10}, {0, 1, 10}, {10, 11, 0}};
    for (const auto& t : tris) b.add(o + t[0], o + t[1], o + t[2]);
}

}  // namespace

TriangulatedComplex six_holed_sphere() {
    Builder b;
    dodecagon(b, 0);
    dodecagon(b, 12);
    b.pair_shared();
    for (int i = 0; i < 12; i += 2) {
        int j = (i + 6) % 12;
        b.identify(i, (i + 1) % 12, 12 + j, 12 + (j + 1) % 12, false);
    }
    return b.build();
}

TriangulatedComplex three_holed_rp2() {
    Builder b;
    dodecagon(b, 0);
    b.pair_shared();
    for (int i = 0; i < 6; i += 2) b.identify(i, i + 1, i + 6, (i + 7) % 12, false);
    return b.build();
}

namespace {

// (2g+1)-gon with e_i ~ e_{i+1} orientation-preserving for even i < 2g.
TriangulatedComplex upsilon_build(int g, int v, bool flips) {
    const int m = 2 * g + 1;
    const int w = m, x = m, y = m + 1;
    Builder b;
    if (v == 1) {
        for (int i = 1; i + 1 < m; ++i) b.add(0, i, i + 1);
    } else if (v == 2) {
        if (!flips || g % 2 == 0) {
            for (int i = 0; i < 2 * g; ++i) b.add(i, i + 1, w);
        } else {
            b.add(0, 1, 2);
            b.add(0, 2, w);
            for (int i = 2; i < 2 * g; ++i) b.add(i, i + 1, w);
        }
    } else {
        for (int i = 0; i < g; ++i) b.add(i, i + 1, y);
        for (int i = g; i < 2 * g; ++i) b.add(i, i + 1, x);
        b.add(g, x, y);
    }
    b.pair_shared();
    std::vector<int> cls(g);
    for (int c = 0; c < g; ++c) cls[c] = b.identify(2 * c, 2 * c + 1, 2 * c + 1, 2 * c + 2, false);
    std::vector<int> ids;
    if (flips && v == 2) {
        if (g % 2 == 0)
            for (int c = 0; c < g / 2; ++c) ids.push_back(cls[c]);
        else
            for (int c = 1; c <= (g + 1) / 2; ++c) ids.push_back(cls[c]);
    }
    if (flips && v == 3) ids = cls;
    return flip_all(b.build(), ids);
}

}  // namespace

TriangulatedComplex upsilon_g1(int g, int v) {
    require(g >= 1, "upsilon_g1: genus must be at least 1");
    require(v >= 1 && v <= 3, "upsilon_g1: vertices per boundary must be 1, 2 or 3");
    require(!(g == 1 && v == 2), "upsilon_g1: the one-holed projective plane has no two-vertex triangulation "
                                 "with equal valences");
    return upsilon_build(g, v, true);
}

TriangulatedComplex upsilon_fan(int g) {
    require(g >= 1, "upsilon_fan: genus must be at least 1");
    return upsilon_build(g, 2, false);
}

TriangulatedComplex klein_b_holed(int holes) {
    require(holes >= 1, "klein_b_holed: need at least one hole");
    // b copies of the one-vertex Upsilon_{2,1} pentagon glued by two involutions on the copies;
    // a fixed point of either involution makes the cover non-orientable
    const int stride = 5;
    Builder b;
    for (int c = 0; c < holes; ++c)
        for (int i = 1; i <= 3; ++i) b.add(c * stride, c * stride + i, c * stride + i + 1);
    b.pair_shared();
    auto sa = [&](int c) { return (c ^ 1) < holes ? c ^ 1 : c; };
    auto sb = [&](int c) {
        if (c % 2 == 1) return c + 1 < holes ? c + 1 : c;
        return c > 0 ? c - 1 : c;
    };
    for (int c = 0; c < holes; ++c) {
        int o = c * stride, oa = sa(c) * stride, ob = sb(c) * stride;
        b.identify(o + 0, o + 1, oa + 1, oa + 2, false);
        b.identify(o + 2, o + 3, ob + 3, ob + 4, false);
    }
    return b.build();
}

TriangulatedComplex closed_orientable_one_vertex(int g) {
    require(g >= 1, "closed_orientable_one_vertex: genus must be at least 1");
    const int m = 4 * g;
    Builder b;
    for (int i = 1; i + 1 < m; ++i) b.add(0, i, i + 1);
    b.pair_shared();
    for (int i = 0; i < m; ++i)
        if (i % 4 <= 1) b.identify(i, i + 1, i + 2, (i + 3) % m, true);
    return b.build();
}

TriangulatedComplex closed_nonorientable_one_vertex(int g) {
    require(g >= 2, "closed_nonorientable_one_vertex: genus must be at least 2");
    const int m = 2 * g;
    Builder b;
    for (int i = 1; i + 1 < m; ++i) b.add(0, i, i + 1);
    b.pair_shared();
    for (int i = 0; i < m; i += 2) b.identify(i, i + 1, i + 1, (i + 2) % m, false);
    return b.build();
}

TriangulatedComplex marked_X(int l) {
    require(l >= 1, "marked_X: need at least one marked vertex");
    // E_1..E_{l-1} are triangles 0..l-2, H_1..H_l are triangles l-1..2l-2 with marked corner 2
    const int e = l - 1;
    std::vector<Pairing> ps;
    for (int i = 0; i + 1 < e; ++i) ps.push_back({{i, 1}, {i + 1, 0}, true});
    std::vector<Slot> free_sides;
    for (int i = 0; i < e; ++i)
        for (int s = 0; s < 3; ++s) {
            bool glued = (s == 1 && i + 1 < e) || (s == 0 && i > 0);
            if (!glued && !(i == 0 && s == 0)) free_sides.push_back({i, s});
        }
    std::vector<int> marked(2 * l - 1, -1);
    for (int h = 0; h < l; ++h) {
        int t = e + h;
        marked[t] = 2;
        ps.push_back({{t, 1}, {t, 2}, true});
        if (e > 0) ps.push_back({{t, 0}, free_sides[h], true});
    }
    return TriangulatedComplex(2 * l - 1, std::move(ps), std::move(marked));
}

TriangulatedComplex marked_Y(int l) {
    require(l >= 1, "marked_Y: need at least one marked vertex");
    TriangulatedComplex e0(1, {});
    auto y = disjoint_union(e0, marked_X(l));
    std::vector<Pairing> ps = y.pairings();
    // the free side of X_l is side 0 of E_1 (or of H_1 when l = 1), now triangle 1
    ps.push_back({{0, 0}, {1, 0}, true});
    return TriangulatedComplex(y.triangle_count(), std::move(ps), y.marked_corners());
}

TriangulatedComplex marked_Z(int l) {
    auto y = marked_Y(l);
    auto z = disjoint_union(y, y);
    std::vector<Pairing> ps = z.pairings();
    ps.push_back({{0, 2}, {y.triangle_count(), 2}, true});
    return TriangulatedComplex(z.triangle_count(), std::move(ps), z.marked_corners());
}

int expected_valence(const BlockSpec& s) {
    const int p = s.param, v = s.vertices_per_boundary;
    switch (s.family) {
        case BlockFamily::Annulus: return 3;
        case BlockFamily::ThreeHoledSphere: return 4;
        case BlockFamily::FourHoledSphere: return 4;
        case BlockFamily::SixHoledSphere: return 5;
        case BlockFamily::ThreeHoledRP2: return 5;
        case BlockFamily::SigmaG1: return v == 1 ? 12 * p - 3 : v == 2 ? 6 * p : 4 * p + 1;
        case BlockFamily::SigmaG2: return v == 1 ? 6 * p + 3 : v == 2 ? 3 * p + 3 : 2 * p + 3;
        case BlockFamily::TorusBHoled: return v == 1 ? 9 : v == 2 ? 6 : 5;
        case BlockFamily::UpsilonG1: return v == 1 ? 6 * p - 3 : v == 2 ? 3 * p : 2 * p + 1;
        case BlockFamily::KleinBHoled: return 9;
        case BlockFamily::MarkedX: return 5 * p - 3;
        case BlockFamily::MarkedY: return 5 * p - 1;
        case BlockFamily::MarkedZ: return 5 * p;
    }
    return 0;
}

TriangulatedComplex build(const BlockSpec& s) {
    const int p = s.param, v = s.vertices_per_boundary;
    auto need_v = [&](int only) {
        require(v == only, to_string(s.family) + " supports only " + std::to_string(only) + " vertices per boundary");
    };
    switch (s.family) {
        case BlockFamily::Annulus: return annulus(v);
        case BlockFamily::ThreeHoledSphere: need_v(2); return three_holed_sphere();
        case BlockFamily::FourHoledSphere: need_v(3); return four_holed_sphere();
        case BlockFamily::SixHoledSphere: need_v(2); return six_holed_sphere();
        case BlockFamily::ThreeHoledRP2: need_v(2); return three_holed_rp2();
        case BlockFamily::SigmaG1: return sigma_g1(p, v);
        case BlockFamily::SigmaG2:
            require(p >= 1, "SigmaG2: genus must be at least 1 (genus 0 is the annulus)");
            return sigma_g2(p, v);
        case BlockFamily::TorusBHoled: return torus_b_holed(p, v);
        case BlockFamily::UpsilonG1: return upsilon_g1(p, v);
        case BlockFamily::KleinBHoled: need_v(1); return klein_b_holed(p);
        case BlockFamily::MarkedX: return marked_X(p);
        case BlockFamily::MarkedY: return marked_Y(p);
        case BlockFamily::MarkedZ: return marked_Z(p);
    }
    throw std::invalid_argument("unknown block family");
}

}  // namespace hypack
