#pragma once

#include <utility>

namespace hypack {

// Lengths are in curvature -1 units, angles in radians.

inline constexpr double kPi = 3.14159265358979323846;

// Upper limit accepted by thick_radius.
inline constexpr double kMargulis = 0.962;

// Vertex angle of an equilateral triangle with side 2r.
double alpha(double r);

// Angle at a finite vertex of a horocyclic ideal triangle with compact side 2r.
double beta(double r);

double inv_alpha(double a);
double inv_beta(double b);

struct TriangleAreas {
    double equilateral;
    double horocyclic;
};

TriangleAreas triangle_areas(double r);

double disk_area(double r);

// Gauss-Bonnet: area of a complete hyperbolic surface with Euler characteristic chi.
double surface_area(int chi);

double thick_radius(double r);

// Length of the loop over a quadrilateral with base delta and sides h.
double quad_loop_length(double delta, double h);

// asinh(2/sqrt(3)).
double yamada_constant();

}  // namespace hypack
