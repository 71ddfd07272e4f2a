#include "hypack/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hypack/hyptrig.hpp"

namespace hypack {

Rational::Rational(std::int64_t p, std::int64_t q) {
    if (q == 0) throw std::domain_error("Rational: zero denominator");
    if (q < 0) p = -p, q = -q;
    std::int64_t g = std::gcd(p, q);
    num = p / g;
    den = q / g;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Attainability a) {
    switch (a) {
        case Attainability::AttainedByConstruction: return "AttainedByConstruction";
        case Attainability::NotAttained: return "NotAttained";
        case Attainability::NecessaryConditionFails: return "NecessaryConditionFails";
        case Attainability::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string signature_problem(SurfaceSignature sig) {
    if (sig.chi >= 0) return "chi must be negative (got " + std::to_string(sig.chi) + ")";
    if (sig.n < 0) return "n must be nonnegative (got " + std::to_string(sig.n) + ")";
    // chi = 2 - 2g - n (orientable) or 2 - g - n with g >= 1 (non-orientable)
    int twice_g = 2 - sig.chi - sig.n;
    bool orientable_ok = twice_g >= 0 && twice_g % 2 == 0;
    bool nonorientable_ok = 2 - sig.chi - sig.n >= 1;
    if (!orientable_ok && !nonorientable_ok)
        return "no surface has chi=" + std::to_string(sig.chi) + " with n=" + std::to_string(sig.n) + " cusps";
    return {};
}

bool valid_signature(SurfaceSignature sig) { return signature_problem(sig).empty(); }

namespace {

void require_valid(SurfaceSignature sig, int k) {
    if (auto p = signature_problem(sig); !p.empty()) throw std::invalid_argument(p);
    if (k < 1) throw std::invalid_argument("k must be positive");
}

}  // namespace

double solver_tolerance() {
    if (const char* s = std::getenv("HYPACK_TOLERANCE")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && *end == '\0' && v > 0 && std::isfinite(v)) return v;
    }
    return 1e-12;
}

double f_k(double r, SurfaceSignature sig, int k) {
    require_valid(sig, k);
    double ci = 6.0 - (6.0 * sig.chi + 3.0 * sig.n) / k;
    double cj = 2.0 * sig.n / k;
    return ci * alpha(r) + (cj == 0 ? 0.0 : cj * beta(r));
}

double solve_vor(SurfaceSignature sig, int k) {
    require_valid(sig, k);
    const double target = 2 * kPi;
    const double tol = solver_tolerance() * target;
    auto g = [&](double r) { return f_k(r, sig, k) - target; };

    double lo = 1e-9, hi = 50.0;
    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0) || !(ghi < 0)) throw std::runtime_error("solve_vor: root not bracketed");

    while (hi - lo > 1e-6 * (1 + lo)) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0) return mid;
        if (gm > 0) lo = mid, glo = gm;
        else hi = mid, ghi = gm;
    }
    // secant polish, kept inside the bracket
    double best = std::abs(glo) < std::abs(ghi) ? lo : hi;
    for (int it = 0; it < 100; ++it) {
        double x = lo - glo * (hi - lo) / (ghi - glo);
        if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        double gx = g(x);
        best = x;
        if (std::abs(gx) < tol * 1e-3 || hi - lo < 4e-16 * hi) break;
        if (gx > 0) lo = x, glo = gx;
        else hi = x, ghi = gx;
    }
    return best;
}

double naive_bound(int chi, int k) {
    if (chi >= 0) throw std::invalid_argument("naive_bound: chi must be negative");
    if (k < 1) throw std::invalid_argument("naive_bound: k must be positive");
    return std::acosh(1.0 - static_cast<double>(chi) / k);
}

double boroczky_bound(int chi, int k) {
    if (chi >= 0) throw std::invalid_argument("boroczky_bound: chi must be negative");
    return solve_vor({chi, 0}, k);
}

Valences valences(SurfaceSignature sig, int k) {
    require_valid(sig, k);
    return {Rational(6LL * k - 6LL * sig.chi - 3LL * sig.n, k), Rational(2LL * sig.n, k)};
}

Attainability attainability(SurfaceSignature sig, int k) {
    require_valid(sig, k);
    bool divides_chi = (6 * sig.chi) % k == 0;
    bool divides_n = sig.n % k == 0;
    if (divides_chi && divides_n) return Attainability::AttainedByConstruction;
    if (sig.n == 0) return Attainability::NotAttained;
    if (k > sig.n) {
        double a = alpha(solve_vor(sig, k));
        double m = std::round(2 * kPi / a);
        if (std::abs(a - 2 * kPi / m) > 1e-9) return Attainability::NecessaryConditionFails;
    }
    return Attainability::Unknown;
}

BoundReport report(SurfaceSignature sig, int k) {
    require_valid(sig, k);
    BoundReport r;
    r.sig = sig;
    r.k = k;
    r.r_vor = solve_vor(sig, k);
    r.r_boroczky = boroczky_bound(sig.chi, k);
    r.r_naive = naive_bound(sig.chi, k);
    auto v = valences(sig, k);
    r.i = v.i;
    r.j = v.j;
    r.attainability = attainability(sig, k);
    return r;
}

}  // namespace hypack
