#ifndef K3_EXACT_POLY_HPP
#define K3_EXACT_POLY_HPP

#include <utility>
#include <vector>

#include "k3/numeric.hpp"

// Exact univariate polynomial arithmetic over Q(i), ascending coefficient
// order. Degrees here never exceed 24, so plain fraction arithmetic with
// monic normalization in the Euclidean steps is enough.

namespace k3::exact {

using Poly = std::vector<RationalComplex>;  // coefficient of t^j at index j

Poly trim(Poly p);
bool is_zero(const Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const RationalComplex& c);
Poly derivative(const Poly& a);
Poly monic(const Poly& a);

RationalComplex eval(const Poly& a, const RationalComplex& t);

// Quotient/remainder with exact coefficients; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Exact quotient; throws std::domain_error if the division leaves a remainder.
Poly div_exact(const Poly& a, const Poly& b);

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Multiplicity of t0 as a root of p (repeated exact synthetic division).
int root_multiplicity(const Poly& p, const RationalComplex& t0);

// Yun square-free decomposition: p = lc * prod f_k^k with each returned
// (f_k, k) square-free, monic and pairwise coprime; factors of degree 0 are
// dropped.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

}  // namespace k3::exact

#endif
