#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hypack/complex.hpp"

namespace hypack {

struct AssemblyRequest {
    int chi = -1;
    int n = 0;
    int k = 1;
    bool orientable = true;
};

class InadmissibleRequest : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Empty when the request can be assembled, otherwise the reason.
std::string request_problem(const AssemblyRequest& req);

// Genus of the closed surface obtained by filling the cusps.
int request_genus(const AssemblyRequest& req);

// A complex together with the block-boundary curves, each a closed edge path given
// by pairing ids in order. Together the curves pass once through every vertex.
struct Assembled {
    TriangulatedComplex complex;
    std::vector<std::vector<int>> curves;
};

Assembled closed_orientable(int g, int k);
Assembled closed_nonorientable(int g, int k);

// Cut open every edge of the closed path and sew a copy of Y_l into each slit.
TriangulatedComplex unzip_insert(const TriangulatedComplex& c, const std::vector<int>& cycle, int l);

struct VertexReport {
    int vertex = 0;
    int i = 0;
    int j = 0;
};

struct AssemblyCertificate {
    int i = 0;
    int j = 0;
    std::vector<VertexReport> vertices;
    bool valences_ok = false;
    bool chi_ok = false;
    bool triangles_ok = false;
    bool connected = false;
    bool orientability_ok = false;
    bool marked_ok = false;
    bool closed = false;
    bool ok = false;
    std::vector<std::string> defects;
};

AssemblyCertificate certify_assembly(const TriangulatedComplex& c, const AssemblyRequest& req);

struct AssemblyResult {
    TriangulatedComplex complex;
    AssemblyCertificate certificate;
};

// Throws InadmissibleRequest when request_problem is non-empty.
AssemblyResult marked_surface(const AssemblyRequest& req);

}  // namespace hypack
