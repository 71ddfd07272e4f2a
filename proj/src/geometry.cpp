#include "hypack/geometry.hpp"

#include <cmath>

#include "hypack/hyptrig.hpp"

namespace hypack {

namespace {

std::string join_defects(const GeometricCertificate& c) {
    std::string s = "surface does not realize the extremal packing";
    for (const auto& d : c.defects) s += "; " + d;
    return s;
}

}  // namespace

RealizationError::RealizationError(GeometricCertificate cert)
    : std::runtime_error(join_defects(cert)), cert_(std::move(cert)) {}

GeometricCertificate certify_geometry(const TriangulatedComplex& c, SurfaceSignature sig, int k) {
    GeometricCertificate out;
    out.r = solve_vor(sig, k);
    out.edge_length = 2 * out.r;
    const double a = alpha(out.r), b = beta(out.r);

    auto classes = vertex_classes(c);
    int nonmarked = 0;
    for (size_t v = 0; v < classes.size(); ++v) {
        const auto& vc = classes[v];
        if (vc.marked) continue;
        ++nonmarked;
        VertexAngle va;
        va.vertex = static_cast<int>(v);
        va.i = vc.nonmarked_corners;
        va.j = vc.triangle_valence - vc.nonmarked_corners;
        va.angle_sum = va.i * a + va.j * b;
        double defect = std::abs(va.angle_sum - 2 * kPi);
        out.max_angle_defect = std::max(out.max_angle_defect, defect);
        if (defect >= kGeometryTolerance || vc.boundary) {
            out.defects.push_back("vertex " + std::to_string(v) + " (i=" + std::to_string(va.i) +
                                  ", j=" + std::to_string(va.j) + (vc.boundary ? ", on boundary" : "") +
                                  ") angle defect " + std::to_string(defect));
        }
        out.vertices.push_back(va);
    }
    if (nonmarked != k)
        out.defects.push_back("expected " + std::to_string(k) + " non-marked vertices, found " +
                              std::to_string(nonmarked));
    if (c.marked_count() != sig.n)
        out.defects.push_back("expected " + std::to_string(sig.n) + " cusps, found " +
                              std::to_string(c.marked_count()));

    out.horocyclic = c.marked_count();
    out.equilateral = c.triangle_count() - out.horocyclic;
    auto areas = triangle_areas(out.r);
    double total = out.equilateral * areas.equilateral + out.horocyclic * areas.horocyclic;
    out.area_residual = std::abs(total - surface_area(sig.chi));
    if (out.area_residual >= kGeometryTolerance)
        out.defects.push_back("area identity residual " + std::to_string(out.area_residual));
    if (!completeness_check(c)) out.defects.push_back("a cusp triangle is not closed up");

    out.density = k * disk_area(out.r) / surface_area(sig.chi);
    out.ok = out.defects.empty();
    return out;
}

GeometricCertificate realize(const TriangulatedComplex& c, SurfaceSignature sig, int k) {
    auto cert = certify_geometry(c, sig, k);
    if (!cert.ok) throw RealizationError(std::move(cert));
    return cert;
}

double density(SurfaceSignature sig, int k) { return k * disk_area(solve_vor(sig, k)) / surface_area(sig.chi); }

bool completeness_check(const TriangulatedComplex& c) {
    for (int t = 0; t < c.triangle_count(); ++t) {
        int m = c.marked_corner(t);
        if (m < 0) continue;
        Slot out{t, m}, in{t, (m + 2) % 3};
        if (!c.is_paired(out) || c.partner(out) != in) return false;
    }
    return true;
}

}  // namespace hypack
