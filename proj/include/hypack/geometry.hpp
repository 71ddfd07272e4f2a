#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hypack/bounds.hpp"
#include "hypack/complex.hpp"

namespace hypack {

struct VertexAngle {
    int vertex = 0;  // index into vertex_classes
    int i = 0;       // corners of equilateral (non-marked) triangles
    int j = 0;       // corners of horocyclic (marked) triangles
    double angle_sum = 0;
};

struct GeometricCertificate {
    double r = 0;
    double edge_length = 0;
    std::vector<VertexAngle> vertices;
    double max_angle_defect = 0;
    int equilateral = 0;
    int horocyclic = 0;
    double area_residual = 0;
    double density = 0;
    bool ok = false;
    std::vector<std::string> defects;
};

inline constexpr double kGeometryTolerance = 1e-9;

// Assign edge length 2r with r = solve_vor(sig, k) and check every angle sum and the area identity.
GeometricCertificate certify_geometry(const TriangulatedComplex& c, SurfaceSignature sig, int k);

class RealizationError : public std::runtime_error {
public:
    explicit RealizationError(GeometricCertificate cert);
    const GeometricCertificate& certificate() const { return cert_; }

private:
    GeometricCertificate cert_;
};

// As certify_geometry, throwing RealizationError when a check fails.
GeometricCertificate realize(const TriangulatedComplex& c, SurfaceSignature sig, int k);

double density(SurfaceSignature sig, int k);

// Each marked triangle has its two sides at the marked corner glued to each other.
bool completeness_check(const TriangulatedComplex& c);

}  // namespace hypack
