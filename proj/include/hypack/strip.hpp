#pragma once

namespace hypack {

struct QuadFacts {
    double z;
    double theta;
};

struct NonSepParams {
    double delta = 0;
    double h = 0;
    double eps = 0;
};

// a + b is half the length of the curve being crossed.
struct SepParams {
    double a = 0;
    double b = 0;
    double h = 0;
    double eps = 0;
};

QuadFacts quadfacts(double eps, double h);

double nonsep_length(const NonSepParams& p);

// Width at which the separating case passes from the intersecting to the ultraparallel regime.
double phase_transition(double h);

// Full length 2x of the new geodesic, by regime.
double sep_length(const SepParams& p);

// The individual routes, exposed for cross-checking.
double sep_length_triangle(const SepParams& p);  // eps < phase_transition(h)
double sep_length_hexagon(const SepParams& p);   // eps > phase_transition(h)
double sep_length_expanded(const SepParams& p);

// Strip width giving the requested length; throws std::domain_error below the eps -> 0 infimum.
double solve_eps(double target, const NonSepParams& p);
double solve_eps(double target, const SepParams& p);

}  // namespace hypack
