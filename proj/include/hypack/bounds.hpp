#pragma once

#include <cstdint>
#include <string>

namespace hypack {

struct SurfaceSignature {
    int chi = -1;
    int n = 0;
};

// Exact fraction in lowest terms with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t p, std::int64_t q = 1);

    bool is_integer() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Attainability { AttainedByConstruction, NotAttained, NecessaryConditionFails, Unknown };

std::string to_string(Attainability a);

struct Valences {
    Rational i;
    Rational j;
    bool integral() const { return i.is_integer() && j.is_integer(); }
};

struct BoundReport {
    SurfaceSignature sig;
    int k = 1;
    double r_vor = 0;
    double r_boroczky = 0;
    double r_naive = 0;
    Rational i;
    Rational j;
    Attainability attainability = Attainability::Unknown;
};

// Empty when valid, otherwise the reason.
std::string signature_problem(SurfaceSignature sig);
bool valid_signature(SurfaceSignature sig);

// Solver tolerance; HYPACK_TOLERANCE overrides the 1e-12 default.
double solver_tolerance();

double f_k(double r, SurfaceSignature sig, int k);
double solve_vor(SurfaceSignature sig, int k);
double naive_bound(int chi, int k);
double boroczky_bound(int chi, int k);
Valences valences(SurfaceSignature sig, int k);
Attainability attainability(SurfaceSignature sig, int k);
BoundReport report(SurfaceSignature sig, int k);

}  // namespace hypack
