#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hypack {

// Side s of a triangle runs from corner s to corner (s+1)%3.
struct Slot {
    int tri = 0;
    int side = 0;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Corner {
    int tri = 0;
    int corner = 0;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

// reversed == true sends the start corner of a to the end corner of b, which is
// the orientation-compatible gluing of two consistently oriented triangles.
// reversed == false sends start to start.
struct Pairing {
    Slot a;
    Slot b;
    bool reversed = true;
    friend bool operator==(const Pairing&, const Pairing&) = default;
};

class TriangulatedComplex {
public:
    TriangulatedComplex() = default;
    // marked_corner[t] is the marked corner of triangle t, or -1.
    TriangulatedComplex(int triangle_count, std::vector<Pairing> pairings, std::vector<int> marked_corner = {});

    int triangle_count() const { return n_; }
    const std::vector<Pairing>& pairings() const { return pairings_; }
    const std::vector<int>& marked_corners() const { return marked_; }

    // Index into pairings(), or -1 for an unpaired slot.
    int pairing_at(Slot s) const { return slot_pairing_[3 * s.tri + s.side]; }
    bool is_paired(Slot s) const { return pairing_at(s) >= 0; }
    bool is_marked(int t) const { return marked_[t] >= 0; }
    int marked_corner(int t) const { return marked_[t]; }
    int marked_count() const;
    int free_slot_count() const;

    // The slot glued to s and whether the gluing is reversed. Requires is_paired(s).
    Slot partner(Slot s, bool* reversed = nullptr) const;

    // Pairings sorted with a < b inside each pairing.
    TriangulatedComplex canonical() const;

    friend bool operator==(const TriangulatedComplex&, const TriangulatedComplex&) = default;

private:
    int n_ = 0;
    std::vector<Pairing> pairings_;
    std::vector<int> marked_;
    std::vector<int> slot_pairing_;
};

struct VertexClass {
    std::vector<Corner> corners;  // in rotation order
    int triangle_valence = 0;
    int nonmarked_corners = 0;  // corners lying in non-marked triangles
    bool marked = false;
    bool boundary = false;
};

std::vector<VertexClass> vertex_classes(const TriangulatedComplex& c);

// Class index of each corner, indexed 3*tri + corner, matching vertex_classes order.
std::vector<int> corner_labels(const TriangulatedComplex& c);

int euler_characteristic(const TriangulatedComplex& c);

int component_count(const TriangulatedComplex& c);
bool connected(const TriangulatedComplex& c);

// Throws std::invalid_argument on a disconnected complex.
bool orientability(const TriangulatedComplex& c);

// +1/-1 per triangle when orientable, empty otherwise.
std::vector<int> orientation_signs(const TriangulatedComplex& c);

struct GenusInfo {
    int genus = 0;
    bool orientable = true;
    int boundary = 0;
};

GenusInfo genus(const TriangulatedComplex& c);

struct BoundaryEntry {
    Slot slot;
    bool forward = true;  // traversed from corner side to side+1
};

struct BoundaryComponent {
    std::vector<BoundaryEntry> cycle;
    int vertex_count = 0;
};

// Components ordered by their smallest slot; on orientable complexes each cycle
// follows the boundary orientation induced by orientation_signs.
std::vector<BoundaryComponent> boundary_components(const TriangulatedComplex& c);

// Triangles of b are renumbered after those of a.
TriangulatedComplex disjoint_union(const TriangulatedComplex& a, const TriangulatedComplex& b);

// Glue boundary component bc1 of c1 to bc2 of c2. With vertices p_i of bc1 and q_j of
// bc2 in cycle order, p_i goes to q_{offset-i}, or to q_{offset+i} when reverse is set.
TriangulatedComplex glue(const TriangulatedComplex& c1, int bc1, const TriangulatedComplex& c2, int bc2,
                         int offset = 0, bool reverse = false);

// Same, for two distinct boundary components of one complex.
TriangulatedComplex glue_self(const TriangulatedComplex& c, int bc1, int bc2, int offset = 0, bool reverse = false);

TriangulatedComplex flip_edge(const TriangulatedComplex& c, int pairing_id);

struct MarkedCheck {
    bool ok = true;
    int marked_vertices = 0;
    std::vector<std::string> defects;
};

MarkedCheck validate_marked(const TriangulatedComplex& c);

}  // namespace hypack
