#include "hypack/strip.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace hypack {

namespace {

void require_positive(double x, const char* what) {
    if (!std::isfinite(x) || !(x > 0)) throw std::domain_error(std::string(what) + " must be positive and finite");
}

double sq(double x) { return x * x; }

constexpr double kTransitionBand = 1e-9;

// acosh of a value that may round just below 1
double acosh_clamped(double c) { return c <= 1 ? 0.0 : std::acosh(c); }

}  // namespace

QuadFacts quadfacts(double eps, double h) {
    require_positive(eps, "eps");
    require_positive(h, "h");
    double z = std::asinh(std::cosh(h) * std::sinh(eps / 2));
    double s = std::cosh(eps / 2) / std::cosh(z);
    return {z, std::asin(std::min(1.0, s))};
}

double nonsep_length(const NonSepParams& p) {
    require_positive(p.delta, "delta");
    require_positive(p.h, "h");
    if (!std::isfinite(p.eps) || p.eps < 0) throw std::domain_error("eps must be nonnegative");
    double c = std::cosh(p.h) * std::sinh(p.eps / 2) * std::sinh(p.delta / 2) +
               std::cosh(p.eps / 2) * std::cosh(p.delta / 2);
    return 2 * acosh_clamped(c);
}

double phase_transition(double h) {
    require_positive(h, "h");
    return 2 * std::asinh(1 / std::sinh(h));
}

namespace {

void check_sep(const SepParams& p) {
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.h, "h");
    if (!std::isfinite(p.eps) || p.eps < 0) throw std::domain_error("eps must be nonnegative");
}

}  // namespace

double sep_length_triangle(const SepParams& p) {
    check_sep(p);
    double q = sq(std::sinh(p.h) * std::sinh(p.eps / 2));
    if (!(q < 1)) throw std::domain_error("triangle route needs eps below the phase transition");
    double cos_psi = 2 * q - 1;
    double y = std::acosh(std::cosh(p.eps / 2) / std::sqrt(1 - q));
    double c = 0.5 * ((1 - cos_psi) * std::cosh(2 * y + p.a + p.b) - (1 + cos_psi) * std::cosh(p.a - p.b));
    return 2 * acosh_clamped(c);
}

double sep_length_hexagon(const SepParams& p) {
    check_sep(p);
    double q = sq(std::sinh(p.h) * std::sinh(p.eps / 2));
    if (!(q > 1)) throw std::domain_error("hexagon route needs eps above the phase transition");
    double cosh_d = 2 * q - 1;
    double y = std::acosh(std::cosh(p.h) * std::sinh(p.eps / 2) / std::sqrt(q - 1));
    double c = 0.5 * (std::cosh(2 * y + p.a + p.b) * (cosh_d - 1) - std::cosh(p.a - p.b) * (cosh_d + 1));
    return 2 * acosh_clamped(c);
}

double sep_length_expanded(const SepParams& p) {
    check_sep(p);
    double s = p.a + p.b;
    double c = std::cosh(p.eps) * std::cosh(s) + std::sinh(p.eps) * std::cosh(p.h) * std::sinh(s) +
               sq(std::sinh(p.h) * std::sinh(p.eps / 2)) * (std::cosh(s) - std::cosh(p.a - p.b));
    return 2 * acosh_clamped(c);
}

double sep_length(const SepParams& p) {
    check_sep(p);
    if (p.eps == 0) return 2 * (p.a + p.b);
    double q = sq(std::sinh(p.h) * std::sinh(p.eps / 2));
    // both routes divide by |1 - q|; at the transition itself use the common limit
    if (std::abs(1 - q) <= kTransitionBand) return sep_length_expanded(p);
    return q < 1 ? sep_length_triangle(p) : sep_length_hexagon(p);
}

namespace {

double bisect_eps(double target, double infimum, const std::function<double(double)>& len) {
    if (!std::isfinite(target) || !(target > infimum))
        throw std::domain_error("target length " + std::to_string(target) + " is not above the infimum " +
                                std::to_string(infimum));
    double lo = 0, hi = 1;
    while (len(hi) < target) {
        lo = hi;
        hi *= 2;
        if (hi > 1e3) throw std::domain_error("target length out of reach");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (len(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_eps(double target, const NonSepParams& p) {
    NonSepParams q = p;
    q.eps = 0;
    nonsep_length(q);
    return bisect_eps(target, p.delta, [&](double e) {
        q.eps = e;
        return nonsep_length(q);
    });
}

double solve_eps(double target, const SepParams& p) {
    SepParams q = p;
    q.eps = 0;
    check_sep(q);
    return bisect_eps(target, 2 * (p.a + p.b), [&](double e) {
        q.eps = e;
        return sep_length(q);
    });
}

}  // namespace hypack
