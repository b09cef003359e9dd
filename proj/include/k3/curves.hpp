#ifndef K3_CURVES_HPP
#define K3_CURVES_HPP

#include <functional>
#include <utility>
#include <vector>

#include "k3/numeric.hpp"

namespace k3 {

// Class s*S + e*E in the rank-2 sublattice spanned by the section S and the
// fibre E, with (S.S) = -2, (E.E) = 0, (S.E) = 1.
struct LatticeClass {
    long long s = 0;
    long long e = 0;
};

long long intersect(const LatticeClass& c1, const LatticeClass& c2);

struct PolarizationReport {
    long long self_intersection;
    bool primitive;  // gcd(s, e) = 1
    bool ample;      // c^2 > 0, c.S > 0, c.E > 0 (rank-2 test set)
};

PolarizationReport polarization_check(const LatticeClass& c);

// Rational member S + sum m_i N_i of |S + gE|: multiplicities keyed by the
// index of the singular fibre, sum m_i = g.
struct CurveConfig {
    int genus = 0;
    std::vector<int> multiplicities;

    int total() const {
        int t = 0;
        for (int m : multiplicities) t += m;
        return t;
    }
    bool valid() const { return genus > 0 && total() == genus; }
};

// Streams every composition of g into `parts` nonnegative parts in ascending
// lexicographic order.
class CompositionStream {
  public:
    CompositionStream(int g, int parts);
    // Writes the next composition into `out`; false when exhausted.
    bool next(std::vector<int>& out);

  private:
    int g_, parts_;
    bool started_ = false, done_ = false;
    std::vector<int> cur_;
};

BigInt binomial(int n, int k);
BigInt composition_count(int g, int parts);

// Streams all CurveConfigs for |S+gE| on a surface with `fibres` singular
// fibres; returns the count. The visitor may be empty when only the count is
// wanted.
BigInt enumerate_rational_members(int g, int fibres, const std::function<void(const CurveConfig&)>& visit);

// Coefficients n_0..n_gmax of prod_{n>=1} (1 - q^n)^(-24).
std::vector<BigInt> yau_zaslow(int gmax);

struct SeveriQuery {
    int g;  // K3 genus (> 2)
    int k;  // multiple of the polarization
    int h;  // geometric genus
    long long self_intersection() const { return 2LL * g - 2; }
    long long arithmetic_genus() const { return 1LL + static_cast<long long>(k) * k * (g - 1); }
};

struct SeveriNumbers {
    long long dimension;
    long long node_count;
};

SeveriNumbers severi_numbers(const SeveriQuery& q);

struct VeryAmpleBound {
    long long k_very_ample_level;  // floor((2g-2)/4) for the primitive class
    long long h_min_irreducible;   // ceil((k(6k-1)(g-1)+4)/6)
};

VeryAmpleBound very_ample_and_bound(int g, int k);

struct QuarticSeveriNumbers {
    int dim_w_s;
    int kernel_dim;
    int fibre_dim;
};

// The genus-3 (quartic surface) constants for l = 1, 2.
QuarticSeveriNumbers quartic_severi_numbers(int l);

// Dual graph of the unramified comb representative: a spine vertex plus one
// chain of m_j vertices per fibre with m_j > 0; always a tree on 1 + g
// vertices.
struct CombGraph {
    int spine = 0;  // vertex id of the section component
    struct Chain {
        int fibre_index;
        std::vector<int> vertices;
    };
    std::vector<Chain> chains;
    std::vector<std::pair<int, int>> edges;
    int vertex_count = 1;
};

CombGraph unramified_comb(const CurveConfig& cfg);

}  // namespace k3

#endif
