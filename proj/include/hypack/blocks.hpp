#pragma once

#include <string>

#include "hypack/complex.hpp"

namespace hypack {

enum class BlockFamily {
    Annulus,
    ThreeHoledSphere,
    FourHoledSphere,
    SixHoledSphere,
    SigmaG1,
    SigmaG2,
    TorusBHoled,
    ThreeHoledRP2,
    UpsilonG1,
    KleinBHoled,
    MarkedX,
    MarkedY,
    MarkedZ,
};

std::string to_string(BlockFamily f);

struct BlockSpec {
    BlockFamily family = BlockFamily::Annulus;
    int param = 1;  // genus g, hole count b, or marked count l
    int vertices_per_boundary = 1;
};

TriangulatedComplex build(const BlockSpec& spec);

// Triangle valence the block is built to have at every non-marked vertex.
// For marked blocks this is the valence of the large boundary vertex.
int expected_valence(const BlockSpec& spec);

// Genus-g surface with one boundary component, v vertices on it.
TriangulatedComplex sigma_g1(int g, int v);
// Genus-g surface with two boundary components, v vertices on each; g = 0 is the annulus.
TriangulatedComplex sigma_g2(int g, int v);
TriangulatedComplex annulus(int v);
TriangulatedComplex torus_b_holed(int b, int v);
TriangulatedComplex three_holed_sphere();
TriangulatedComplex four_holed_sphere();
TriangulatedComplex six_holed_sphere();
TriangulatedComplex three_holed_rp2();
// Non-orientable genus g with one boundary component, v vertices on it.
// There is no balanced two-vertex triangulation for g = 1; that request throws.
TriangulatedComplex upsilon_g1(int g, int v);
// Two-vertex fan of the (2g+1)-gon before any flips; boundary vertex valences are not balanced.
TriangulatedComplex upsilon_fan(int g);
// Klein bottle with b holes, one vertex per hole, valence 9.
TriangulatedComplex klein_b_holed(int b);

// Closed surfaces from a single polygon with one vertex.
TriangulatedComplex closed_orientable_one_vertex(int g);
TriangulatedComplex closed_nonorientable_one_vertex(int g);

// Marked blocks. Marked triangles carry their marked vertex at corner 2.
TriangulatedComplex marked_X(int l);
// Boundary: sides 1 and 2 of triangle 0, meeting at its free corner 2.
TriangulatedComplex marked_Y(int l);
TriangulatedComplex marked_Z(int l);

}  // namespace hypack
