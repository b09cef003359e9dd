#ifndef K3_FAMILIES_HPP
#define K3_FAMILIES_HPP

#include <vector>

#include "k3/weierstrass.hpp"

namespace k3 {

// Parameters of the explicit families: 12 pairwise distinct points and the
// deformation parameter K (K = 0 is the cuspidal family). The cube root of
// K^2 uses the branch r^(2/3) e^(2i theta/3) with theta = arg K in [0, 2pi),
// so that its cube is exactly K^2.
struct FamilyParams {
    std::vector<Complex> a;
    Complex K = Complex(0.0, 0.0);
};

inline constexpr double kDistinctRelTol = 1e-8;

// Minimum pairwise distance of the a-tuple (0 if fewer than 2 points).
double min_pairwise_distance(const std::vector<Complex>& a);

// A = 0, B = prod (x0 - a_i x1); 12 cuspidal fibres over the a_i.
WeierstrassData cuspidal_family(const std::vector<Complex>& a);
WeierstrassData cuspidal_family(const std::vector<RationalComplex>& a);

// A = cbrt(K^2) * delta * x1^8, B = alpha + K x1^12 with
// delta = -cbrt(27/4) and alpha = prod (x0 - a_i x1); discriminant
// -432 alpha (alpha + 2 K x1^12).
WeierstrassData nodal_family(const std::vector<Complex>& a, Complex K);

Complex cbrt_K_squared(Complex K);

enum class FamilyPattern {
    NodalSmooth24,  // 24 distinct discriminant roots: smooth K3, 24 nodal fibres
    Cuspidal12,     // A identically zero, 12 double roots: 12 type II fibres
    Degenerate,     // anything else (root collisions, higher fibres)
};

struct FamilyValidation {
    FamilyPattern pattern;
    double min_separation;  // 0 when multiple roots are present outside the cuspidal pattern
    std::vector<RootMult> roots;
};

FamilyValidation validate_family(const WeierstrassData& w, double tol = 1e-8);

}  // namespace k3

#endif
