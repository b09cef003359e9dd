#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "k3/curves.hpp"

using namespace k3;

namespace {

// Independent oracle: partition numbers by Euler's pentagonal recurrence,
// then the 24-fold convolution power of the partition series.
std::vector<BigInt> partition_numbers(int nmax) {
    std::vector<BigInt> p(static_cast<size_t>(nmax) + 1);
    p[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            BigInt term = 0;
            if (g1 <= n) term += p[static_cast<size_t>(n - g1)];
            if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
            acc += (k % 2 == 1) ? term : -term;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

std::vector<BigInt> series_power(const std::vector<BigInt>& s, int power) {
    std::vector<BigInt> acc(s.size());
    acc[0] = 1;
    for (int rep = 0; rep < power; ++rep) {
        std::vector<BigInt> next(s.size());
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = 0; i + j < s.size(); ++j) next[i + j] += acc[i] * s[j];
        acc = std::move(next);
    }
    return acc;
}

// Brute-force recursive enumeration, independent of CompositionStream.
void brute_compositions(int g, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(g);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= g; ++v) {
        prefix.push_back(v);
        brute_compositions(g - v, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("intersection numbers on span{S, E}") {
    LatticeClass S{1, 0}, E{0, 1};
    CHECK(intersect(S, S) == -2);
    CHECK(intersect(E, E) == 0);
    CHECK(intersect(S, E) == 1);
    for (long long g = 1; g <= 12; ++g) {
        LatticeClass c{1, g};
        CHECK(intersect(c, c) == 2 * g - 2);
    }
    CHECK(intersect({2, 3}, {1, 1}) == 1);

    // Symmetry and bilinearity on random classes.
    std::mt19937 rng(2);
    std::uniform_int_distribution<long long> coef(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        LatticeClass a{coef(rng), coef(rng)}, b{coef(rng), coef(rng)}, c{coef(rng), coef(rng)};
        CHECK(intersect(a, b) == intersect(b, a));
        LatticeClass bc{b.s + c.s, b.e + c.e};
        CHECK(intersect(a, bc) == intersect(a, b) + intersect(a, c));
    }
}

TEST_CASE("polarization checks") {
    PolarizationReport r = polarization_check({1, 3});
    CHECK(r.self_intersection == 4);
    CHECK(r.primitive);
    CHECK(r.ample);

    r = polarization_check({1, 2});
    CHECK(r.self_intersection == 2);
    CHECK(r.primitive);
    CHECK_FALSE(r.ample);  // (c . S) = 0 at the g = 2 boundary

    CHECK_FALSE(polarization_check({2, 2}).primitive);

    for (long long g = 1; g <= 50; ++g) CHECK(polarization_check({1, g}).ample == (g > 2));
}

TEST_CASE("composition enumeration: counts and lexicographic order") {
    CHECK(composition_count(3, 12) == 364);
    CHECK(composition_count(3, 24) == 2600);
    CHECK(composition_count(8, 24) == binomial(31, 23));

    std::vector<std::vector<int>> seen;
    BigInt count = enumerate_rational_members(3, 12, [&](const CurveConfig& cfg) {
        CHECK(cfg.genus == 3);
        CHECK(cfg.total() == 3);
        seen.push_back(cfg.multiplicities);
    });
    CHECK(count == 364);
    CHECK(seen.size() == 364);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    std::vector<int> first(12, 0);
    first.back() = 3;
    CHECK(seen.front() == first);
    std::vector<int> last(12, 0);
    last.front() = 3;
    CHECK(seen.back() == last);

    // One fibre: the single configuration (g).
    int configs = 0;
    CHECK(enumerate_rational_members(7, 1, [&](const CurveConfig&) { ++configs; }) == 1);
    CHECK(configs == 1);
}

TEST_CASE("enumeration agrees with brute force") {
    for (int g : {1, 2, 3, 4}) {
        for (int s : {1, 2, 3, 5}) {
            std::vector<std::vector<int>> brute, streamed;
            std::vector<int> prefix;
            brute_compositions(g, s, prefix, brute);
            std::sort(brute.begin(), brute.end());
            enumerate_rational_members(g, s, [&](const CurveConfig& cfg) { streamed.push_back(cfg.multiplicities); });
            CHECK(streamed == brute);
            CHECK(composition_count(g, s) == BigInt(brute.size()));
        }
    }
}

TEST_CASE("Yau-Zaslow series against the partition-function oracle") {
    std::vector<BigInt> n = yau_zaslow(10);
    CHECK(n[0] == 1);
    CHECK(n[1] == 24);
    CHECK(n[2] == 324);
    CHECK(n[3] == 3200);

    std::vector<BigInt> oracle = series_power(partition_numbers(10), 24);
    for (size_t i = 0; i < n.size(); ++i) CHECK(n[i] == oracle[i]);

    // Truncation stability: recomputation at higher order agrees on the prefix.
    std::vector<BigInt> n5 = yau_zaslow(5);
    for (size_t i = 0; i <= 5; ++i) CHECK(n5[i] == n[i]);
}

TEST_CASE("Severi numbers") {
    SeveriNumbers s = severi_numbers({3, 1, 0});
    CHECK(s.dimension == 0);
    CHECK(s.node_count == 3);

    SeveriQuery q{3, 2, 0};
    s = severi_numbers({3, 2, static_cast<int>(q.arithmetic_genus())});
    CHECK(s.dimension == q.arithmetic_genus());
    CHECK(s.node_count == 0);

    s = severi_numbers({3, 2, 5});
    CHECK(s.dimension == 5);
    CHECK(s.node_count == 4);

    CHECK_THROWS_AS(severi_numbers({3, 1, 4}), InvalidGenusError);
    CHECK(SeveriQuery{3, 1, 0}.self_intersection() == 4);
}

TEST_CASE("very ampleness level and irreducibility bound") {
    VeryAmpleBound v = very_ample_and_bound(3, 1);
    CHECK(v.k_very_ample_level == 1);

    CHECK(very_ample_and_bound(7, 1).h_min_irreducible == 6);

    for (int g = 3; g <= 30; ++g) {
        long long expect = (5LL * g - 1 + 5) / 6;  // ceil((5g-1)/6)
        CHECK(very_ample_and_bound(g, 1).h_min_irreducible == expect);
    }
}

TEST_CASE("quartic Severi constants") {
    QuarticSeveriNumbers q1 = quartic_severi_numbers(1);
    CHECK(q1.dim_w_s == 11);
    CHECK(q1.kernel_dim == 21);
    CHECK(q1.fibre_dim == 31);

    QuarticSeveriNumbers q2 = quartic_severi_numbers(2);
    CHECK(q2.dim_w_s == 15);
    CHECK(q2.kernel_dim == 11);
    CHECK(q2.fibre_dim == 25);

    // Consistency: fibre = dim W_S + kernel - 1, and 35 - C(l+3, 3).
    for (int l : {1, 2}) {
        QuarticSeveriNumbers q = quartic_severi_numbers(l);
        CHECK(q.fibre_dim == q.dim_w_s + q.kernel_dim - 1);
        CHECK(BigInt(q.fibre_dim) == 35 - binomial(l + 3, 3));
    }

    CHECK_THROWS_AS(quartic_severi_numbers(3), BadDegreeError);
}

TEST_CASE("unramified comb graphs") {
    // All of g on one fibre: spine plus a single chain of g vertices.
    CurveConfig cfg;
    cfg.genus = 5;
    cfg.multiplicities.assign(12, 0);
    cfg.multiplicities[4] = 5;
    CombGraph g = unramified_comb(cfg);
    CHECK(g.vertex_count == 6);
    CHECK(g.chains.size() == 1);
    CHECK(g.chains[0].fibre_index == 4);
    CHECK(g.chains[0].vertices.size() == 5);
    CHECK(g.edges.size() == 5);

    // 0/1 multiplicities: a star.
    cfg.genus = 4;
    cfg.multiplicities.assign(12, 0);
    for (int i = 0; i < 4; ++i) cfg.multiplicities[static_cast<size_t>(2 * i)] = 1;
    g = unramified_comb(cfg);
    CHECK(g.vertex_count == 5);
    CHECK(g.chains.size() == 4);
    for (const auto& e : g.edges) CHECK(e.first == g.spine);

    // Random configs are trees on 1 + g vertices.
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        int genus = 1 + static_cast<int>(rng() % 8);
        cfg.genus = genus;
        cfg.multiplicities.assign(12, 0);
        for (int u = 0; u < genus; ++u) cfg.multiplicities[rng() % 12] += 1;
        g = unramified_comb(cfg);
        CHECK(g.vertex_count == 1 + genus);
        CHECK(g.edges.size() == static_cast<size_t>(g.vertex_count - 1));
        // Connectivity via union-find gives acyclicity with the edge count.
        std::vector<int> parent(static_cast<size_t>(g.vertex_count));
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        for (const auto& e : g.edges) parent[static_cast<size_t>(find(e.first))] = find(e.second);
        std::set<int> comps;
        for (int v = 0; v < g.vertex_count; ++v) comps.insert(find(v));
        CHECK(comps.size() == 1);
    }

    cfg.genus = 3;
    cfg.multiplicities.assign(12, 1);
    CHECK_THROWS_AS(unramified_comb(cfg), Error);
}

TEST_CASE("streamed cardinality equals the count up to g = 8") {
    for (int g : {7, 8}) {
        for (int s : {12, 24}) {
            long long streamed = 0;
            BigInt count = enumerate_rational_members(g, s, [&](const CurveConfig&) { ++streamed; });
            CHECK(count == BigInt(streamed));
        }
    }
}
