#include "hypack/assembler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "hypack/blocks.hpp"
#include "hypack/bounds.hpp"

namespace hypack {

std::string request_problem(const AssemblyRequest& req) {
    if (req.chi >= 0) return "chi must be negative";
    if (req.n < 0) return "n must be nonnegative";
    if (req.k < 1) return "k must be positive";
    if ((6 * -req.chi) % req.k != 0)
        return std::to_string(req.k) + " does not divide " + std::to_string(6 * -req.chi);
    if (req.n % req.k != 0) return std::to_string(req.k) + " does not divide n = " + std::to_string(req.n);
    int rest = 2 - req.chi - req.n;
    if (req.orientable) {
        if (rest % 2 != 0) return "an orientable surface needs chi + n even";
        if (rest < 0) return "no orientable surface with chi = " + std::to_string(req.chi) + " and " +
                             std::to_string(req.n) + " cusps";
    } else if (rest < 1) {
        return "no non-orientable surface with chi = " + std::to_string(req.chi) + " and " + std::to_string(req.n) +
               " cusps";
    }
    return {};
}

int request_genus(const AssemblyRequest& req) {
    int rest = 2 - req.chi - req.n;
    return req.orientable ? rest / 2 : rest;
}

namespace {

// A growing complex whose blocks are glued along boundary components named by a slot on them.
class Kit {
public:
    std::vector<Slot> add(const TriangulatedComplex& block) {
        int shift = c_.triangle_count();
        std::vector<Slot> reps;
        for (const auto& bc : boundary_components(block)) {
            Slot s = bc.cycle.front().slot;
            s.tri += shift;
            reps.push_back(s);
        }
        c_ = disjoint_union(c_, block);
        return reps;
    }

    void join(Slot a, Slot b, bool reverse = false) {
        auto bcs = boundary_components(c_);
        int before = static_cast<int>(c_.pairings().size());
        c_ = glue_self(c_, index_of(bcs, a), index_of(bcs, b), 0, reverse);
        std::vector<int> seam(c_.pairings().size() - before);
        std::iota(seam.begin(), seam.end(), before);
        curves_.push_back(std::move(seam));
    }

    // Glue a cap block along its first boundary.
    void cap(Slot a, const TriangulatedComplex& block) { join(a, add(block).front()); }

    std::vector<Slot> add(const Assembled& block) {
        int shift = static_cast<int>(c_.pairings().size());
        for (auto curve : block.curves) {
            for (int& id : curve) id += shift;
            curves_.push_back(std::move(curve));
        }
        return add(block.complex);
    }

    Assembled done() { return {std::move(c_), std::move(curves_)}; }

private:
    static int index_of(const std::vector<BoundaryComponent>& bcs, Slot s) {
        for (int i = 0; i < static_cast<int>(bcs.size()); ++i)
            for (const auto& e : bcs[i].cycle)
                if (e.slot == s) return i;
        throw std::logic_error("assembly: slot is not on the boundary");
    }

    TriangulatedComplex c_;
    std::vector<std::vector<int>> curves_;
};

TriangulatedComplex triangle() { return TriangulatedComplex(1, {}); }

// Pieces with two boundaries each, glued end to end in a cycle.
void ring(Kit& kit, const std::vector<TriangulatedComplex>& pieces, bool twist = false) {
    std::vector<std::vector<Slot>> b;
    for (const auto& p : pieces) b.push_back(kit.add(p));
    int n = static_cast<int>(b.size());
    for (int p = 0; p < n; ++p) kit.join(b[p][1], b[(p + 1) % n][0], twist && p == n - 1);
}

std::vector<TriangulatedComplex> alternate(const TriangulatedComplex& a, const TriangulatedComplex& b, int copies) {
    std::vector<TriangulatedComplex> out;
    for (int i = 0; i < copies; ++i) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

void capped(Kit& kit, const TriangulatedComplex& base, const TriangulatedComplex& cap) {
    for (Slot s : kit.add(base)) kit.cap(s, cap);
}

// Three-holed pieces in a ring through their first two boundaries, third boundary capped.
void ring_with_caps(Kit& kit, const TriangulatedComplex& node, const TriangulatedComplex& link,
                    const TriangulatedComplex& cap, int copies) {
    std::vector<std::vector<Slot>> nodes, links;
    for (int i = 0; i < copies; ++i) {
        nodes.push_back(kit.add(node));
        links.push_back(kit.add(link));
    }
    for (int i = 0; i < copies; ++i) {
        kit.join(nodes[i][1], links[i][0]);
        kit.join(links[i][1], nodes[(i + 1) % copies][0]);
        kit.cap(nodes[i][2], cap);
    }
}

std::vector<int> all_curve_edges(const Assembled& a) {
    std::vector<int> ids;
    for (const auto& c : a.curves) ids.insert(ids.end(), c.begin(), c.end());
    return ids;
}

// Flip edges between non-marked triangles until every interior non-marked vertex meets exactly
// `target` non-marked corners, and every boundary vertex `boundary_target`. Frozen edges are never flipped.
TriangulatedComplex balance(TriangulatedComplex c, int target, const std::vector<int>& frozen,
                            int boundary_target = 0) {
    std::vector<char> is_frozen(c.pairings().size(), 0);
    for (int id : frozen) is_frozen[id] = 1;
    std::vector<int> candidates;
    for (int id = 0; id < static_cast<int>(c.pairings().size()); ++id)
        if (!is_frozen[id]) candidates.push_back(id);
    if (candidates.empty()) throw std::logic_error("balance: no flippable edges");

    std::vector<int> label, val, goal;
    std::vector<char> marked;
    auto refresh = [&] {
        auto classes = vertex_classes(c);
        label.assign(3 * c.triangle_count(), -1);
        val.assign(classes.size(), 0);
        marked.assign(classes.size(), 0);
        goal.assign(classes.size(), target);
        for (size_t v = 0; v < classes.size(); ++v) {
            for (const auto& x : classes[v].corners) label[3 * x.tri + x.corner] = static_cast<int>(v);
            val[v] = classes[v].nonmarked_corners;
            marked[v] = classes[v].marked;
            if (classes[v].boundary) goal[v] = boundary_target;
        }
    };
    refresh();
    long cost = 0;
    for (size_t v = 0; v < val.size(); ++v)
        if (!marked[v]) cost += static_cast<long>(val[v] - goal[v]) * (val[v] - goal[v]);

    std::mt19937_64 rng(0x5eed1234abcdULL);
    double temp = 2.0;
    for (long it = 0; it < 2000000 && cost > 0; ++it) {
        temp = std::max(0.05, temp * 0.9995);
        int id = candidates[rng() % candidates.size()];
        const Pairing p = c.pairings()[id];
        const int t = p.a.tri, u = p.b.tri, s = p.a.side, w = p.b.side;
        if (t == u || c.is_marked(t) || c.is_marked(u)) continue;
        std::map<int, int> change;
        change[label[3 * t + s]] -= 1;
        change[label[3 * t + (s + 1) % 3]] -= 1;
        change[label[3 * t + (s + 2) % 3]] += 1;
        change[label[3 * u + (w + 2) % 3]] += 1;
        long delta = 0;
        bool ok = true;
        for (auto [v, d] : change) {
            int nv = val[v] + d;
            if (nv < 1) ok = false;
            delta += static_cast<long>(nv - goal[v]) * (nv - goal[v]) - static_cast<long>(val[v] - goal[v]) * (val[v] - goal[v]);
        }
        if (!ok) continue;
        double roll = static_cast<double>(rng() >> 11) * 0x1p-53;
        if (delta > 0 && roll >= std::exp(-static_cast<double>(delta) / temp)) continue;
        c = flip_edge(c, id);
        refresh();
        cost += delta;
    }
    if (cost != 0) throw std::logic_error("balance: flips did not reach uniform valence");
    return c;
}

// q copies of a, with the edges of curve `cut` reconnected from each copy to the next.
Assembled cyclic_cover(const Assembled& a, int cut, int q) {
    const int nt = a.complex.triangle_count();
    const int np = static_cast<int>(a.complex.pairings().size());
    std::vector<char> is_cut(np, 0);
    for (int id : a.curves[cut]) is_cut[id] = 1;
    std::vector<Pairing> ps;
    std::vector<int> marked;
    for (int i = 0; i < q; ++i) {
        for (int id = 0; id < np; ++id) {
            Pairing p = a.complex.pairings()[id];
            p.a.tri += i * nt;
            p.b.tri += (is_cut[id] ? (i + 1) % q : i) * nt;
            ps.push_back(p);
        }
        marked.insert(marked.end(), a.complex.marked_corners().begin(), a.complex.marked_corners().end());
    }
    Assembled out{TriangulatedComplex(q * nt, std::move(ps), std::move(marked)), {}};
    for (int i = 0; i < q; ++i)
        for (auto curve : a.curves) {
            for (int& id : curve) id += i * np;
            out.curves.push_back(std::move(curve));
        }
    return out;
}

void require_closed_args(int g, int g_min, int k, int total, const char* what) {
    if (g < g_min) throw std::invalid_argument(std::string(what) + ": genus must be at least " + std::to_string(g_min));
    if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be positive");
    if (total % k != 0)
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(k) + " does not divide " +
                                    std::to_string(total));
}

Assembled one_vertex(TriangulatedComplex c) {
    int last = static_cast<int>(c.pairings().size()) - 1;
    return {std::move(c), {{last}}};
}

}  // namespace

Assembled closed_orientable(int g, int k) {
    require_closed_args(g, 2, k, 12 * (g - 1), "closed_orientable");
    const int m = 12 * (g - 1) / k;
    if (k == 1) return one_vertex(closed_orientable_one_vertex(g));
    Kit kit;
    if (k % 6 == 0 && m % 2 == 0) {
        ring(kit, alternate(sigma_g2(m / 2, 3), annulus(3), k / 6));
    } else if (k % 12 == 0) {
        // four-holed spheres in a cycle, consecutive nodes joined twice
        const int q = k / 12;
        auto edge = sigma_g2((m - 1) / 2, 3);
        std::vector<std::vector<Slot>> nodes;
        for (int i = 0; i < q; ++i) nodes.push_back(kit.add(four_holed_sphere()));
        for (int i = 0; i < q; ++i)
            for (int h = 0; h < 2; ++h) {
                auto e = kit.add(edge);
                kit.join(nodes[i][2 + h], e[0]);
                kit.join(e[1], nodes[(i + 1) % q][h]);
            }
    } else if (k % 3 == 0) {
        capped(kit, torus_b_holed(k / 3, 3), sigma_g1(3 * (g - 1) / k, 3));
    } else if (k % 4 == 0) {
        ring(kit, alternate(sigma_g2(4 * (g - 1) / k, 2), annulus(2), k / 4));
    } else if (k % 2 == 0) {
        ring(kit, alternate(sigma_g2(2 * (g - 1) / k, 1), annulus(1), k / 2));
    } else {
        capped(kit, torus_b_holed(k, 1), sigma_g1((g - 1) / k, 1));
    }
    return kit.done();
}

Assembled closed_nonorientable(int g, int k) {
    require_closed_args(g, 3, k, 6 * (g - 2), "closed_nonorientable");
    const int m = 6 * (g - 2) / k;
    if (k == 1) return one_vertex(closed_nonorientable_one_vertex(g));
    Kit kit;
    if (k % 6 == 0) {
        if (m % 2 == 0) {
            capped(kit, torus_b_holed(k / 3, 3), upsilon_g1(m / 2, 3));
        } else if (m % 3 == 0 && m > 3) {
            capped(kit, torus_b_holed(k / 2, 2), upsilon_g1(m / 3, 2));
        } else if (m == 3) {
            // bipartite: copy i of the three-holed sphere meets copy i+b of the three-holed RP^2 along hole b
            const int p = k / 6;
            std::vector<std::vector<Slot>> spheres, planes;
            for (int i = 0; i < p; ++i) spheres.push_back(kit.add(three_holed_sphere()));
            for (int i = 0; i < p; ++i) planes.push_back(kit.add(three_holed_rp2()));
            for (int i = 0; i < p; ++i)
                for (int b = 0; b < 3; ++b) kit.join(spheres[i][b], planes[(i + b) % p][b]);
        } else if (m == 1 && k % 12 == 0) {
            const int q = k / 12;
            std::vector<std::vector<Slot>> nodes;
            for (int i = 0; i < q; ++i) nodes.push_back(kit.add(four_holed_sphere()));
            for (int i = 0; i < q; ++i) {
                auto a = kit.add(annulus(3));
                kit.join(nodes[i][1], a[0]);
                kit.join(a[1], nodes[(i + 1) % q][0]);
                kit.cap(nodes[i][2], upsilon_g1(1, 3));
                kit.cap(nodes[i][3], upsilon_g1(1, 3));
            }
        } else if (m == 1) {
            // balance the six-vertex ring once, then unroll it along its second seam
            ring_with_caps(kit, three_holed_sphere(), annulus(2), upsilon_fan(1), 1);
            Assembled base = kit.done();
            base.complex = balance(std::move(base.complex), m + 6, all_curve_edges(base));
            return cyclic_cover(base, 1, k / 6);
        } else if (m % 3 == 1) {
            const int g0 = (m + 2) / 3;
            ring_with_caps(kit, three_holed_sphere(), sigma_g2(g0 - 1, 2), upsilon_g1(g0, 2), k / 6);
        } else {
            const int g0 = (m + 1) / 3;
            ring_with_caps(kit, three_holed_rp2(), sigma_g2(g0 - 1, 2), upsilon_g1(g0, 2), k / 6);
        }
    } else if (k % 3 == 0) {
        capped(kit, torus_b_holed(k / 3, 3), upsilon_g1(3 * (g - 2) / k, 3));
    } else if (k % 2 == 0) {
        const int g0 = 2 * (g - 2) / k;
        if (g0 > 1) {
            capped(kit, torus_b_holed(k / 2, 2), upsilon_g1(g0, 2));
        } else if (k % 4 == 0) {
            ring(kit, alternate(sigma_g2(1, 2), annulus(2), k / 4), true);
        } else {
            capped(kit, torus_b_holed(k / 2, 2), upsilon_fan(1));
            Assembled a = kit.done();
            a.complex = balance(std::move(a.complex), m + 6, all_curve_edges(a));
            return a;
        }
    } else {
        capped(kit, torus_b_holed(k, 1), upsilon_g1((g - 2) / k, 1));
    }
    return kit.done();
}

TriangulatedComplex unzip_insert(const TriangulatedComplex& c, const std::vector<int>& cycle, int l) {
    if (l < 1) throw std::invalid_argument("unzip_insert: l must be at least 1");
    if (cycle.empty()) throw std::invalid_argument("unzip_insert: empty edge path");
    const int npair = static_cast<int>(c.pairings().size());
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("unzip_insert: repeated edge");
    for (int id : cycle)
        if (id < 0 || id >= npair) throw std::invalid_argument("unzip_insert: no such edge " + std::to_string(id));

    // endpoints of each edge read along slot a
    auto label = corner_labels(c);
    const int m = static_cast<int>(cycle.size());
    std::vector<int> eu(m), ev(m);
    for (int i = 0; i < m; ++i) {
        Slot a = c.pairings()[cycle[i]].a;
        eu[i] = label[3 * a.tri + a.side];
        ev[i] = label[3 * a.tri + (a.side + 1) % 3];
    }
    std::vector<char> fwd;
    for (int first : {1, 0}) {
        std::vector<char> f(m);
        f[0] = first;
        bool ok = true;
        for (int i = 1; i < m && ok; ++i) {
            int head = f[i - 1] ? ev[i - 1] : eu[i - 1];
            if (eu[i] == head) f[i] = 1;
            else if (ev[i] == head) f[i] = 0;
            else ok = false;
        }
        if (ok && (f[m - 1] ? ev[m - 1] : eu[m - 1]) == (f[0] ? eu[0] : ev[0])) {
            fwd = std::move(f);
            break;
        }
    }
    if (fwd.empty()) throw std::invalid_argument("unzip_insert: edges do not form a closed path");

    const TriangulatedComplex y = marked_Y(l);
    int n = c.triangle_count();
    std::vector<Pairing> ps = c.pairings();
    std::vector<int> marked = c.marked_corners();
    for (int i = 0; i < m; ++i) {
        const Pairing e = c.pairings()[cycle[i]];
        const bool a_fwd = fwd[i], b_fwd = a_fwd != e.reversed;
        for (auto p : y.pairings()) {
            p.a.tri += n;
            p.b.tri += n;
            ps.push_back(p);
        }
        marked.insert(marked.end(), y.marked_corners().begin(), y.marked_corners().end());
        // side 2 of the Y runs from its free corner forward, side 1 backward; the free corner goes to the tail
        ps[cycle[i]] = {{n, 2}, e.a, !a_fwd};
        ps.push_back({{n, 1}, e.b, b_fwd});
        n += y.triangle_count();
    }
    return TriangulatedComplex(n, std::move(ps), std::move(marked));
}

AssemblyCertificate certify_assembly(const TriangulatedComplex& c, const AssemblyRequest& req) {
    AssemblyCertificate out;
    auto fail = [&](std::string d) { out.defects.push_back(std::move(d)); };
    Valences v = valences({req.chi, req.n}, req.k);
    if (!v.integral()) fail("valences " + v.i.str() + ", " + v.j.str() + " are not integers");
    out.i = static_cast<int>(v.i.num / v.i.den);
    out.j = static_cast<int>(v.j.num / v.j.den);

    auto classes = vertex_classes(c);
    out.valences_ok = true;
    for (size_t x = 0; x < classes.size(); ++x) {
        const auto& vc = classes[x];
        if (vc.marked) continue;
        VertexReport r{static_cast<int>(x), vc.nonmarked_corners, vc.triangle_valence - vc.nonmarked_corners};
        if (r.i != out.i || r.j != out.j) {
            out.valences_ok = false;
            fail("vertex " + std::to_string(x) + " has (i, j) = (" + std::to_string(r.i) + ", " +
                 std::to_string(r.j) + ")");
        }
        out.vertices.push_back(r);
    }
    if (static_cast<int>(out.vertices.size()) != req.k) {
        out.valences_ok = false;
        fail("expected " + std::to_string(req.k) + " non-marked vertices, found " + std::to_string(out.vertices.size()));
    }
    out.closed = c.free_slot_count() == 0;
    if (!out.closed) fail("complex has unpaired sides");
    int chi = euler_characteristic(c);
    out.chi_ok = chi == req.chi + req.n;
    if (!out.chi_ok) fail("Euler characteristic " + std::to_string(chi) + ", expected " + std::to_string(req.chi + req.n));
    const int total = 2 * (req.k - req.chi);
    out.triangles_ok = c.triangle_count() == total && c.marked_count() == req.n;
    if (!out.triangles_ok)
        fail(std::to_string(c.triangle_count()) + " triangles with " + std::to_string(c.marked_count()) +
             " marked, expected " + std::to_string(total) + " with " + std::to_string(req.n));
    out.connected = connected(c);
    if (!out.connected) fail("complex is disconnected");
    out.orientability_ok = out.connected && orientability(c) == req.orientable;
    if (out.connected && !out.orientability_ok) fail(req.orientable ? "complex is not orientable" : "complex is orientable");
    auto mc = validate_marked(c);
    out.marked_ok = mc.ok && mc.marked_vertices == req.n;
    if (!out.marked_ok) {
        for (auto& d : mc.defects) fail(d);
        if (mc.marked_vertices != req.n)
            fail(std::to_string(mc.marked_vertices) + " marked vertices, expected " + std::to_string(req.n));
    }
    out.ok = out.defects.empty();
    return out;
}

namespace {

TriangulatedComplex unzip_all(const Assembled& a, int l) {
    TriangulatedComplex c = a.complex;
    for (const auto& curve : a.curves) c = unzip_insert(c, curve, l);
    return c;
}

TriangulatedComplex marked_one_vertex(const AssemblyRequest& req, int g) {
    Kit kit;
    if (!req.orientable) {
        capped(kit, upsilon_g1(g, 1), marked_X(req.n));
    } else if (g >= 1) {
        capped(kit, sigma_g1(g, 1), marked_X(req.n));
    } else {
        capped(kit, marked_X(req.n / 2), marked_X(req.n - req.n / 2));
    }
    return kit.done().complex;
}

TriangulatedComplex marked_sphere(int k, int l) {
    Kit kit;
    switch (k) {
        case 2: capped(kit, annulus(1), marked_X(l)); return kit.done().complex;
        case 4: capped(kit, annulus(2), marked_Z(l)); return kit.done().complex;
        case 3: capped(kit, triangle(), triangle()); break;
        case 6: capped(kit, annulus(3), triangle()); break;
        case 12: capped(kit, four_holed_sphere(), triangle()); break;
        default: throw std::logic_error("marked_sphere: unexpected k");
    }
    return unzip_all(kit.done(), l);
}

TriangulatedComplex marked_projective_plane(int k, int l) {
    Kit kit;
    switch (k) {
        case 2: {
            capped(kit, upsilon_fan(1), marked_Z(l));
            return balance(kit.done().complex, 3 + 3 * l, {});
        }
        case 3: capped(kit, upsilon_g1(1, 3), triangle()); return unzip_all(kit.done(), l);
        case 6: capped(kit, three_holed_rp2(), marked_Z(l)); return kit.done().complex;
        default: throw std::logic_error("marked_projective_plane: unexpected k");
    }
}

TriangulatedComplex assemble(const AssemblyRequest& req) {
    const int g = request_genus(req);
    const int k = req.k, l = req.n / req.k;
    if (req.n == 0)
        return req.orientable ? closed_orientable(g, k).complex : closed_nonorientable(g, k).complex;
    if (k == 1) return marked_one_vertex(req, g);
    Kit kit;
    if (req.orientable) {
        if (g >= 2) return unzip_all(closed_orientable(g, k), l);
        if (g == 1) {
            capped(kit, torus_b_holed(k, 1), marked_X(l));
            return kit.done().complex;
        }
        return marked_sphere(k, l);
    }
    if (g >= 3) return unzip_all(closed_nonorientable(g, k), l);
    if (g == 2) {
        capped(kit, klein_b_holed(k), marked_X(l));
        return kit.done().complex;
    }
    return marked_projective_plane(k, l);
}

}  // namespace

AssemblyResult marked_surface(const AssemblyRequest& req) {
    if (auto why = request_problem(req); !why.empty()) throw InadmissibleRequest(why);
    AssemblyResult r{assemble(req), {}};
    r.certificate = certify_assembly(r.complex, req);
    return r;
}

}  // namespace hypack
