#include "hypack/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hypack {

TriangulatedComplex::TriangulatedComplex(int triangle_count, std::vector<Pairing> pairings,
                                         std::vector<int> marked_corner)
    : n_(triangle_count), pairings_(std::move(pairings)), marked_(std::move(marked_corner)) {
    if (n_ < 0) throw std::invalid_argument("negative triangle count");
    if (marked_.empty()) marked_.assign(n_, -1);
    if (static_cast<int>(marked_.size()) != n_) throw std::invalid_argument("marked list size mismatch");
    for (int m : marked_)
        if (m < -1 || m > 2) throw std::invalid_argument("marked corner out of range");
    slot_pairing_.assign(3 * n_, -1);
    auto claim = [&](Slot s, int id) {
        if (s.tri < 0 || s.tri >= n_ || s.side < 0 || s.side > 2)
            throw std::invalid_argument("slot out of range: (" + std::to_string(s.tri) + "," + std::to_string(s.side) + ")");
        int& slot = slot_pairing_[3 * s.tri + s.side];
        if (slot >= 0)
            throw std::invalid_argument("slot (" + std::to_string(s.tri) + "," + std::to_string(s.side) + ") paired twice");
        slot = id;
    };
    for (int id = 0; id < static_cast<int>(pairings_.size()); ++id) {
        const auto& p = pairings_[id];
        if (p.a == p.b) throw std::invalid_argument("slot paired with itself");
        claim(p.a, id);
        claim(p.b, id);
    }
}

int TriangulatedComplex::marked_count() const {
    return static_cast<int>(std::count_if(marked_.begin(), marked_.end(), [](int m) { return m >= 0; }));
}

int TriangulatedComplex::free_slot_count() const {
    return static_cast<int>(std::count(slot_pairing_.begin(), slot_pairing_.end(), -1));
}

Slot TriangulatedComplex::partner(Slot s, bool* reversed) const {
    int id = pairing_at(s);
    if (id < 0) throw std::logic_error("partner of an unpaired slot");
    const auto& p = pairings_[id];
    if (reversed) *reversed = p.reversed;
    return p.a == s ? p.b : p.a;
}

TriangulatedComplex TriangulatedComplex::canonical() const {
    std::vector<Pairing> ps = pairings_;
    for (auto& p : ps)
        if (p.b < p.a) std::swap(p.a, p.b);
    std::sort(ps.begin(), ps.end(), [](const Pairing& x, const Pairing& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.reversed < y.reversed;
    });
    return TriangulatedComplex(n_, std::move(ps), marked_);
}

namespace {

int other_side(int corner, int side) { return side == corner ? (corner + 2) % 3 : corner; }

// Follow the gluing across `side` from `corner`; returns the image corner and the side we arrive through.
bool step(const TriangulatedComplex& c, Corner x, int side, Corner& out, int& arrived) {
    Slot s{x.tri, side};
    if (!c.is_paired(s)) return false;
    bool rev = false;
    Slot t = c.partner(s, &rev);
    bool at_start = side == x.corner;
    int img = (rev == at_start) ? (t.side + 1) % 3 : t.side;
    out = {t.tri, img};
    arrived = t.side;
    return true;
}

struct FreeEnd {
    Slot slot;
    int corner;
};

struct ClassData {
    std::vector<VertexClass> classes;
    std::vector<int> label;
    // for boundary classes, the two free side ends of the arc
    std::vector<std::pair<FreeEnd, FreeEnd>> ends;
};

ClassData compute_classes(const TriangulatedComplex& c) {
    ClassData d;
    int n = c.triangle_count();
    d.label.assign(3 * n, -1);
    for (int t = 0; t < n; ++t) {
        for (int k = 0; k < 3; ++k) {
            if (d.label[3 * t + k] >= 0) continue;
            int id = static_cast<int>(d.classes.size());
            Corner start{t, k};
            auto visit = [&](Corner x) {
                int& l = d.label[3 * x.tri + x.corner];
                if (l >= 0) throw std::logic_error("non-surface identification at a vertex");
                l = id;
            };
            visit(start);

            // walk leaving through side k
            std::vector<Corner> fwd;
            bool cycle = false;
            Corner cur = start;
            int leave = k;
            FreeEnd end_a{}, end_b{};
            for (;;) {
                Corner nxt;
                int arrived;
                if (!step(c, cur, leave, nxt, arrived)) {
                    end_a = {Slot{cur.tri, leave}, cur.corner};
                    break;
                }
                if (nxt == start) {
                    if (arrived == k) throw std::logic_error("non-surface identification at a vertex");
                    cycle = true;
                    break;
                }
                visit(nxt);
                fwd.push_back(nxt);
                cur = nxt;
                leave = other_side(nxt.corner, arrived);
            }
            std::vector<Corner> back;
            if (!cycle) {
                cur = start;
                leave = (k + 2) % 3;
                for (;;) {
                    Corner nxt;
                    int arrived;
                    if (!step(c, cur, leave, nxt, arrived)) {
                        end_b = {Slot{cur.tri, leave}, cur.corner};
                        break;
                    }
                    if (nxt == start) throw std::logic_error("non-surface identification at a vertex");
                    visit(nxt);
                    back.push_back(nxt);
                    cur = nxt;
                    leave = other_side(nxt.corner, arrived);
                }
            }
            VertexClass vc;
            vc.corners.assign(back.rbegin(), back.rend());
            vc.corners.push_back(start);
            vc.corners.insert(vc.corners.end(), fwd.begin(), fwd.end());
            vc.triangle_valence = static_cast<int>(vc.corners.size());
            vc.boundary = !cycle;
            for (const auto& x : vc.corners) {
                if (!c.is_marked(x.tri)) ++vc.nonmarked_corners;
                if (c.marked_corner(x.tri) == x.corner) vc.marked = true;
            }
            d.classes.push_back(std::move(vc));
            d.ends.push_back({end_b, end_a});
        }
    }
    return d;
}

std::vector<BoundaryComponent> boundary_components_of(const TriangulatedComplex& c, const ClassData& d,
                                                      const std::vector<int>& signs) {
    // free side end -> the other free end of the same boundary vertex
    std::map<std::pair<Slot, int>, std::pair<Slot, int>> link;
    for (size_t v = 0; v < d.classes.size(); ++v) {
        if (!d.classes[v].boundary) continue;
        auto [a, b] = d.ends[v];
        link[{a.slot, a.corner}] = {b.slot, b.corner};
        link[{b.slot, b.corner}] = {a.slot, a.corner};
    }
    std::vector<BoundaryComponent> out;
    std::vector<char> seen(3 * c.triangle_count(), 0);
    for (int t = 0; t < c.triangle_count(); ++t) {
        for (int s = 0; s < 3; ++s) {
            Slot first{t, s};
            if (c.is_paired(first) || seen[3 * t + s]) continue;
            BoundaryComponent bc;
            bool fwd = signs.empty() || signs[t] > 0;
            Slot cur = first;
            for (;;) {
                seen[3 * cur.tri + cur.side] = 1;
                bc.cycle.push_back({cur, fwd});
                int head = fwd ? (cur.side + 1) % 3 : cur.side;
                auto it = link.find({cur, head});
                if (it == link.end()) throw std::logic_error("broken boundary walk");
                auto [nslot, ncorner] = it->second;
                fwd = ncorner == nslot.side;
                cur = nslot;
                if (cur == first) break;
                if (seen[3 * cur.tri + cur.side]) throw std::logic_error("broken boundary walk");
            }
            bc.vertex_count = static_cast<int>(bc.cycle.size());
            out.push_back(std::move(bc));
        }
    }
    return out;
}

std::vector<int> triangle_components(const TriangulatedComplex& c) {
    std::vector<int> parent(c.triangle_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : c.pairings()) parent[find(p.a.tri)] = find(p.b.tri);
    std::vector<int> comp(c.triangle_count());
    for (int t = 0; t < c.triangle_count(); ++t) comp[t] = find(t);
    return comp;
}

}  // namespace

std::vector<VertexClass> vertex_classes(const TriangulatedComplex& c) { return compute_classes(c).classes; }

std::vector<int> corner_labels(const TriangulatedComplex& c) { return compute_classes(c).label; }

int euler_characteristic(const TriangulatedComplex& c) {
    int v = static_cast<int>(compute_classes(c).classes.size());
    int e = static_cast<int>(c.pairings().size()) + c.free_slot_count();
    return v - e + c.triangle_count();
}

int component_count(const TriangulatedComplex& c) {
    auto comp = triangle_components(c);
    std::sort(comp.begin(), comp.end());
    return static_cast<int>(std::unique(comp.begin(), comp.end()) - comp.begin());
}

bool connected(const TriangulatedComplex& c) { return component_count(c) == 1; }

std::vector<int> orientation_signs(const TriangulatedComplex& c) {
    int n = c.triangle_count();
    std::vector<int> sign(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (sign[root]) continue;
        sign[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s = 0; s < 3; ++s) {
                Slot here{t, s};
                if (!c.is_paired(here)) continue;
                bool rev = false;
                Slot o = c.partner(here, &rev);
                int want = rev ? sign[t] : -sign[t];
                if (sign[o.tri] == 0) {
                    sign[o.tri] = want;
                    stack.push_back(o.tri);
                } else if (sign[o.tri] != want) {
                    return {};
                }
            }
        }
    }
    return sign;
}

bool orientability(const TriangulatedComplex& c) {
    if (c.triangle_count() > 0 && !connected(c)) throw std::invalid_argument("orientability: disconnected complex");
    return c.triangle_count() == 0 || !orientation_signs(c).empty();
}

std::vector<BoundaryComponent> boundary_components(const TriangulatedComplex& c) {
    return boundary_components_of(c, compute_classes(c), orientation_signs(c));
}

GenusInfo genus(const TriangulatedComplex& c) {
    GenusInfo g;
    int chi = euler_characteristic(c);
    g.orientable = orientability(c);
    g.boundary = static_cast<int>(boundary_components(c).size());
    int rest = 2 - chi - g.boundary;
    if (g.orientable) {
        if (rest < 0 || rest % 2) throw std::logic_error("genus: inconsistent Euler characteristic");
        g.genus = rest / 2;
    } else {
        if (rest < 1) throw std::logic_error("genus: inconsistent Euler characteristic");
        g.genus = rest;
    }
    return g;
}

TriangulatedComplex disjoint_union(const TriangulatedComplex& a, const TriangulatedComplex& b) {
    int shift = a.triangle_count();
    std::vector<Pairing> ps = a.pairings();
    for (auto p : b.pairings()) {
        p.a.tri += shift;
        p.b.tri += shift;
        ps.push_back(p);
    }
    std::vector<int> marked = a.marked_corners();
    marked.insert(marked.end(), b.marked_corners().begin(), b.marked_corners().end());
    return TriangulatedComplex(shift + b.triangle_count(), std::move(ps), std::move(marked));
}

namespace {

TriangulatedComplex pair_components(const TriangulatedComplex& c, const BoundaryComponent& b1,
                                    const BoundaryComponent& b2, int offset, bool reverse) {
    int m = static_cast<int>(b1.cycle.size());
    if (m != static_cast<int>(b2.cycle.size()))
        throw std::invalid_argument("glue: boundary components have different lengths (" + std::to_string(m) +
                                    " vs " + std::to_string(b2.cycle.size()) + ")");
    std::vector<Pairing> ps = c.pairings();
    for (int i = 0; i < m; ++i) {
        int j = reverse ? offset + i : offset - i - 1;
        j = ((j % m) + m) % m;
        const auto& e1 = b1.cycle[i];
        const auto& e2 = b2.cycle[j];
        bool flag = reverse ? (e1.forward != e2.forward) : (e1.forward == e2.forward);
        ps.push_back({e1.slot, e2.slot, flag});
    }
    return TriangulatedComplex(c.triangle_count(), std::move(ps), c.marked_corners());
}

}  // namespace

TriangulatedComplex glue(const TriangulatedComplex& c1, int bc1, const TriangulatedComplex& c2, int bc2, int offset,
                         bool reverse) {
    auto l1 = boundary_components(c1);
    auto l2 = boundary_components(c2);
    if (bc1 < 0 || bc1 >= static_cast<int>(l1.size()) || bc2 < 0 || bc2 >= static_cast<int>(l2.size()))
        throw std::invalid_argument("glue: boundary component index out of range");
    BoundaryComponent b2 = l2[bc2];
    for (auto& e : b2.cycle) e.slot.tri += c1.triangle_count();
    return pair_components(disjoint_union(c1, c2), l1[bc1], b2, offset, reverse);
}

TriangulatedComplex glue_self(const TriangulatedComplex& c, int bc1, int bc2, int offset, bool reverse) {
    auto l = boundary_components(c);
    if (bc1 == bc2) throw std::invalid_argument("glue_self: components must differ");
    if (bc1 < 0 || bc1 >= static_cast<int>(l.size()) || bc2 < 0 || bc2 >= static_cast<int>(l.size()))
        throw std::invalid_argument("glue_self: boundary component index out of range");
    return pair_components(c, l[bc1], l[bc2], offset, reverse);
}

TriangulatedComplex flip_edge(const TriangulatedComplex& c, int pairing_id) {
    if (pairing_id < 0 || pairing_id >= static_cast<int>(c.pairings().size()))
        throw std::invalid_argument("flip_edge: no such pairing");
    const Pairing e = c.pairings()[pairing_id];
    const int t = e.a.tri, u = e.b.tri, s = e.a.side, v = e.b.side;
    if (t == u) throw std::invalid_argument("flip_edge: both sides belong to one triangle");
    if (c.is_marked(t) || c.is_marked(u)) throw std::invalid_argument("flip_edge: marked triangle");

    // New triangles: t = (O, P, O'), u = (Q, O, O') where P, Q, O are corners s, s+1, s+2 of t
    // and O' is the corner of u opposite the flipped side.
    //   t: side 0 = O->P, side 1 = P->O', side 2 = O'->O
    //   u: side 0 = Q->O, side 1 = O->O', side 2 = O'->Q
    std::map<Slot, std::pair<Slot, bool>> moved;  // old slot -> new slot, direction toggled
    moved[{t, (s + 1) % 3}] = {{u, 0}, false};
    moved[{t, (s + 2) % 3}] = {{t, 0}, false};
    if (e.reversed) {
        moved[{u, (v + 1) % 3}] = {{t, 1}, false};
        moved[{u, (v + 2) % 3}] = {{u, 2}, false};
    } else {
        moved[{u, (v + 1) % 3}] = {{u, 2}, true};
        moved[{u, (v + 2) % 3}] = {{t, 1}, true};
    }
    std::vector<Pairing> ps = c.pairings();
    for (int id = 0; id < static_cast<int>(ps.size()); ++id) {
        if (id == pairing_id) {
            ps[id] = {{t, 2}, {u, 1}, true};
            continue;
        }
        auto& p = ps[id];
        bool flag = p.reversed;
        if (auto it = moved.find(p.a); it != moved.end()) p.a = it->second.first, flag ^= it->second.second;
        if (auto it = moved.find(p.b); it != moved.end()) p.b = it->second.first, flag ^= it->second.second;
        p.reversed = flag;
    }
    return TriangulatedComplex(c.triangle_count(), std::move(ps), c.marked_corners());
}

MarkedCheck validate_marked(const TriangulatedComplex& c) {
    MarkedCheck out;
    auto d = compute_classes(c);
    for (size_t v = 0; v < d.classes.size(); ++v) {
        const auto& vc = d.classes[v];
        if (!vc.marked) continue;
        ++out.marked_vertices;
        if (vc.triangle_valence != 1) {
            out.ok = false;
            out.defects.push_back("marked vertex " + std::to_string(v) + " has triangle valence " +
                                  std::to_string(vc.triangle_valence));
        }
        for (const auto& x : vc.corners) {
            if (c.marked_corner(x.tri) != x.corner) {
                out.ok = false;
                out.defects.push_back("marked vertex " + std::to_string(v) + " meets unmarked corner (" +
                                      std::to_string(x.tri) + "," + std::to_string(x.corner) + ")");
            }
        }
    }
    return out;
}

}  // namespace hypack
