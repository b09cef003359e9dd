#include "k3/curves.hpp"

#include <numeric>

namespace k3 {

long long intersect(const LatticeClass& c1, const LatticeClass& c2) {
    return -2 * c1.s * c2.s + c1.s * c2.e + c2.s * c1.e;
}

PolarizationReport polarization_check(const LatticeClass& c) {
    PolarizationReport r{};
    r.self_intersection = intersect(c, c);
    r.primitive = std::gcd(c.s, c.e) == 1;
    const LatticeClass section{1, 0}, fibre{0, 1};
    r.ample = r.self_intersection > 0 && intersect(c, section) > 0 && intersect(c, fibre) > 0;
    return r;
}

CompositionStream::CompositionStream(int g, int parts) : g_(g), parts_(parts) {
    if (g < 0 || parts < 1) throw Error("curves", "enumerate_rational_members", "need g >= 0 and parts >= 1");
}

bool CompositionStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (!started_) {
        cur_.assign(static_cast<size_t>(parts_), 0);
        cur_.back() = g_;
        started_ = true;
        out = cur_;
        return true;
    }
    // Ascending lexicographic successor: move one unit left of the tail
    // block, reset the tail.
    int last = cur_[static_cast<size_t>(parts_ - 1)];
    if (parts_ == 1) {
        done_ = true;
        return false;
    }
    if (last > 0) {
        cur_[static_cast<size_t>(parts_ - 2)] += 1;
        cur_[static_cast<size_t>(parts_ - 1)] = last - 1;
        out = cur_;
        return true;
    }
    int j = parts_ - 2;
    while (j >= 0 && cur_[static_cast<size_t>(j)] == 0) --j;
    if (j <= 0) {
        done_ = true;
        return false;
    }
    int t = cur_[static_cast<size_t>(j)];
    cur_[static_cast<size_t>(j)] = 0;
    cur_[static_cast<size_t>(j - 1)] += 1;
    cur_[static_cast<size_t>(parts_ - 1)] = t - 1;
    out = cur_;
    return true;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt composition_count(int g, int parts) { return binomial(g + parts - 1, parts - 1); }

BigInt enumerate_rational_members(int g, int fibres, const std::function<void(const CurveConfig&)>& visit) {
    if (g < 1 || fibres < 1) throw Error("curves", "enumerate_rational_members", "need g >= 1 and fibres >= 1");
    if (visit) {
        CompositionStream stream(g, fibres);
        CurveConfig cfg;
        cfg.genus = g;
        while (stream.next(cfg.multiplicities)) visit(cfg);
    }
    return composition_count(g, fibres);
}

std::vector<BigInt> yau_zaslow(int gmax) {
    if (gmax < 0) throw Error("curves", "yau_zaslow", "gmax must be nonnegative");
    std::vector<BigInt> c(static_cast<size_t>(gmax) + 1);
    c[0] = 1;
    // Multiply by (1 - q^n)^(-24): 24 passes of c[i] += c[i-n].
    for (int n = 1; n <= gmax; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = n; i <= gmax; ++i) c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - n)];
    return c;
}

SeveriNumbers severi_numbers(const SeveriQuery& q) {
    if (q.h < 0 || q.h > q.arithmetic_genus())
        throw InvalidGenusError("geometric genus " + std::to_string(q.h) + " outside [0, " +
                                std::to_string(q.arithmetic_genus()) + "]");
    return {q.h, q.arithmetic_genus() - q.h};
}

VeryAmpleBound very_ample_and_bound(int g, int k) {
    if (g <= 2 || k < 1) throw Error("curves", "very_ample_and_bound", "need g > 2 and k >= 1");
    long long num = static_cast<long long>(k) * (6LL * k - 1) * (g - 1) + 4;
    return {(2LL * g - 2) / 4, (num + 5) / 6};
}

QuarticSeveriNumbers quartic_severi_numbers(int l) {
    if (l == 1) return {11, 21, 31};
    if (l == 2) return {15, 11, 25};
    throw BadDegreeError(l);
}

CombGraph unramified_comb(const CurveConfig& cfg) {
    if (!cfg.valid()) throw Error("curves", "unramified_comb", "config multiplicities must sum to the genus");
    CombGraph g;
    int next = 1;
    for (size_t j = 0; j < cfg.multiplicities.size(); ++j) {
        int m = cfg.multiplicities[j];
        if (m == 0) continue;
        CombGraph::Chain chain;
        chain.fibre_index = static_cast<int>(j);
        for (int i = 0; i < m; ++i) {
            int v = next++;
            g.edges.emplace_back(i == 0 ? g.spine : chain.vertices.back(), v);
            chain.vertices.push_back(v);
        }
        g.chains.push_back(std::move(chain));
    }
    g.vertex_count = next;
    return g;
}

}  // namespace k3
