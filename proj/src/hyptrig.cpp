#include "hypack/hyptrig.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypack {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": non-finite input");
}

}  // namespace

double alpha(double r) {
    require_finite(r, "alpha");
    if (r < 0) throw std::domain_error("alpha: negative radius");
    return 2.0 * std::asin(1.0 / (2.0 * std::cosh(r)));
}

double beta(double r) {
    require_finite(r, "beta");
    if (r < 0) throw std::domain_error("beta: negative radius");
    return std::asin(1.0 / std::cosh(r));
}

double inv_alpha(double a) {
    require_finite(a, "inv_alpha");
    if (!(a > 0) || a > kPi / 3 + 1e-15) throw std::domain_error("inv_alpha: angle outside (0, pi/3]");
    double c = 1.0 / (2.0 * std::sin(a / 2));
    return c <= 1.0 ? 0.0 : std::acosh(c);
}

double inv_beta(double b) {
    require_finite(b, "inv_beta");
    if (!(b > 0) || b > kPi / 2 + 1e-15) throw std::domain_error("inv_beta: angle outside (0, pi/2]");
    double c = 1.0 / std::sin(b);
    return c <= 1.0 ? 0.0 : std::acosh(c);
}

TriangleAreas triangle_areas(double r) {
    require_finite(r, "triangle_areas");
    if (!(r > 0)) throw std::domain_error("triangle_areas: radius must be positive");
    return {kPi - 3 * alpha(r), kPi - 2 * beta(r)};
}

double disk_area(double r) {
    require_finite(r, "disk_area");
    if (r < 0) throw std::domain_error("disk_area: negative radius");
    // 2 pi (cosh r - 1) written to keep precision for small r
    double s = std::sinh(r / 2);
    return 4 * kPi * s * s;
}

double surface_area(int chi) {
    if (chi >= 0) throw std::domain_error("surface_area: chi must be negative");
    return -2.0 * kPi * chi;
}

double thick_radius(double r) {
    require_finite(r, "thick_radius");
    if (!(r > 0) || !(r < kMargulis)) throw std::domain_error("thick_radius: r outside (0, Margulis)");
    return std::asinh(-std::expm1(-2 * r) / 2);
}

double quad_loop_length(double delta, double h) {
    require_finite(delta, "quad_loop_length");
    require_finite(h, "quad_loop_length");
    if (!(delta > 0)) throw std::domain_error("quad_loop_length: delta must be positive");
    if (h < 0) throw std::domain_error("quad_loop_length: h must be nonnegative");
    return 2 * std::asinh(std::cosh(h) * std::sinh(delta / 2));
}

double yamada_constant() { return std::asinh(2.0 / std::sqrt(3.0)); }

}  // namespace hypack
