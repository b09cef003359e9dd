#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "k3/kodaira.hpp"
#include "k3/modulipath.hpp"

using namespace k3;

namespace {

std::vector<Complex> kpath_line(double k0, double k1, int steps) {
    std::vector<Complex> p;
    for (int i = 0; i <= steps; ++i)
        p.push_back(Complex(k0 + (k1 - k0) * static_cast<double>(i) / steps, 0.0));
    return p;
}

int count_provenance(const PathReport& r, const std::string& needle) {
    int n = 0;
    std::string prev;
    for (const auto& s : r.samples) {
        if (s.provenance != prev && s.provenance.find(needle) != std::string::npos) ++n;
        prev = s.provenance;
    }
    return n;
}

}  // namespace

TEST_CASE("track_beta: constant path and descent to the cusp") {
    double beta0 = std::pow(0.5, 1.0 / 12.0);
    std::vector<Complex> constant(10, Complex(0.25, 0.0));
    auto betas = track_beta(constant, Complex(beta0, 0.0));
    for (Complex b : betas) CHECK(std::abs(b - beta0) < 1e-12);

    auto path = kpath_line(0.25, 0.0, 256);
    betas = track_beta(path, Complex(beta0, 0.0));
    REQUIRE(betas.size() == path.size());
    for (size_t i = 0; i < betas.size(); ++i) {
        Complex w = Complex(1.0, 0.0) - 2.0 * path[i];
        CHECK(std::abs(std::pow(betas[i], 12) - w) < 1e-10);
    }
    CHECK(std::abs(betas.back() - Complex(1.0, 0.0)) < 1e-8);
}

TEST_CASE("track_beta: closed loop K = (1/4) e^{2 pi i s} has trivial monodromy") {
    int steps = 256;
    std::vector<Complex> loop;
    for (int i = 0; i <= steps; ++i)
        loop.push_back(0.25 * std::polar(1.0, 2.0 * M_PI * i / steps));
    double beta0 = std::pow(0.5, 1.0 / 12.0);
    auto betas = track_beta(loop, Complex(beta0, 0.0));
    CHECK(std::abs(betas.back() - betas.front()) < 1e-10);
    // 1 - 2K stays in the right half plane along this loop.
    for (Complex K : loop) CHECK((Complex(1.0, 0.0) - 2.0 * K).real() > 0.0);
}

TEST_CASE("track_beta errors") {
    CHECK_THROWS_AS(track_beta(kpath_line(0.25, 0.5, 8), Complex(std::pow(0.5, 1.0 / 12.0), 0.0)),
                    DegenerateKError);
    CHECK_THROWS_AS(track_beta(kpath_line(0.25, 0.2, 8), Complex(5.0, 0.0)), Error);
}

TEST_CASE("permutation_path: identity") {
    std::vector<int> sigma(12);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> m(12, 0);
    m[0] = 3;
    PathReport r = permutation_path(unity_roots(), sigma, m, Complex(0.25, 0.0), 16);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(r.invariant_violations.empty());
    for (const auto& s : r.samples) CHECK(s.fibres.size() == 24);
}

TEST_CASE("permutation_path: transposition fixes the surface") {
    std::vector<int> sigma(12);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[0], sigma[1]);
    std::vector<int> m(12, 0);
    m[0] = 2;
    m[1] = 1;
    PathReport r = permutation_path(unity_roots(), sigma, m, Complex(0.25, 0.0), 64);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(r.endpoint_residual < 1e-9);
    CHECK(r.invariant_violations.empty());

    // The multiplicities travel with the swapped points.
    const auto& last = r.samples.back();
    CHECK(std::abs(last.params.a[0] - unity_roots()[1]) < 1e-12);
    CHECK(std::abs(last.params.a[1] - unity_roots()[0]) < 1e-12);
    CHECK(last.m[0] == 2);
    CHECK(last.m[1] == 1);
    CHECK(std::abs(last.fibres[0].position - unity_roots()[1]) < 1e-12);
}

TEST_CASE("permutation_path: 12-cycle decomposes into 11 legs") {
    std::vector<int> sigma(12);
    for (int i = 0; i < 12; ++i) sigma[static_cast<size_t>(i)] = (i + 1) % 12;
    std::vector<int> m(12, 0);
    m[0] = 1;
    m[3] = 2;
    PathReport r = permutation_path(unity_roots(), sigma, m, Complex(0.25, 0.0), 24);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(count_provenance(r, "perm[leg") == 11);
}

TEST_CASE("cusp_limit_path: fibres merge into cusps, configuration rides its positions") {
    std::vector<int> m(12, 0);
    m[0] = 4;
    PathReport r = cusp_limit_path(unity_roots(), m, 0.25, 64);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(r.invariant_violations.empty());

    const auto& first = r.samples.front();
    CHECK(first.fibres.size() == 24);
    CHECK(std::abs(first.params.K - Complex(0.25, 0.0)) < 1e-15);

    const auto& last = r.samples.back();
    CHECK(last.fibres.size() == 12);
    CHECK(last.params.K == Complex(0.0, 0.0));
    for (const auto& f : last.fibres) CHECK(f.multiplicity == 2);
    CHECK(last.m[0] == 4);

    // Endpoint surface has cuspidal fibres: classification flips I1 -> II.
    FibreReport fr = fibre_report(cuspidal_family(last.params.a));
    for (const auto& f : fr.fibres) CHECK(f.type.name() == "II");
}

TEST_CASE("node_transfer_path: endpoint identities and separation bound") {
    std::vector<int> m(12, 0);
    m[0] = 2;
    m[1] = 1;
    double K = 0.25;
    PathReport r = node_transfer_path(m, K, 256);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(r.endpoint_residual < 1e-8);
    CHECK(r.invariant_violations.empty());

    double beta = std::pow(1.0 - 2.0 * K, 1.0 / 12.0);
    const auto& first = r.samples.front();
    const auto& last = r.samples.back();
    CHECK(std::abs(first.params.K - Complex(K, 0.0)) < 1e-12);
    CHECK(std::abs(last.params.K - Complex(K, 0.0)) < 1e-10);

    // Moving fibre sweeps an angle of pi/6.
    Complex start = first.fibres[12].position, end = last.fibres[12].position;
    CHECK(std::abs(start - beta * unity_roots()[0]) < 1e-10);
    CHECK(std::abs(end - beta * unity_roots()[1]) < 1e-8);
    CHECK(std::arg(end / start) == doctest::Approx(M_PI / 6.0).epsilon(1e-8));

    // The moving fibre keeps its distance from the static fibres.
    double bound = (1.0 - std::pow(0.5, 1.0 / 12.0)) / 2.0;
    for (const auto& s : r.samples) {
        for (size_t j = 12; j < 24; ++j) {
            if (s.m[j] == 0) continue;
            for (size_t i = 0; i < 12; ++i)
                CHECK(std::abs(s.fibres[j].position - s.fibres[i].position) > bound);
        }
    }

    CHECK_THROWS_AS(node_transfer_path(std::vector<int>{3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, K, 16), Error);
    CHECK_THROWS_AS(node_transfer_path(m, 0.5, 16), Error);
}

TEST_CASE("connect_to_canonical: trivial and two-round cases") {
    std::vector<int> canonical(12, 0);
    canonical[0] = 3;
    PathReport r = connect_to_canonical(canonical, 0.25, 16);
    CHECK(r.endpoint_match);
    CHECK(r.continuous);
    CHECK(count_provenance(r, "transfer exit") == 0);

    // (1,1,1): two transfer rounds.
    std::vector<int> m(12, 0);
    m[0] = m[1] = m[2] = 1;
    r = connect_to_canonical(m, 0.25, 32);
    CHECK(r.continuous);
    CHECK(r.endpoint_match);
    CHECK(r.invariant_violations.empty());
    CHECK(count_provenance(r, "transfer exit") == 2);
    const auto& last = r.samples.back();
    CHECK(last.m[0] == 3);
    for (size_t i = 1; i < 12; ++i) CHECK(last.m[i] == 0);
}

TEST_CASE("connect_to_canonical: random configurations reach (g, 0, ..., 0)") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 4; ++trial) {
        int g = 3 + static_cast<int>(rng() % 3);
        std::vector<int> m(12, 0);
        for (int u = 0; u < g; ++u) m[rng() % 12] += 1;
        PathReport r = connect_to_canonical(m, 0.25, 32);
        CHECK(r.continuous);
        CHECK(r.endpoint_match);
        CHECK(r.invariant_violations.empty());
        CHECK(r.samples.back().m[0] == g);
    }
}

TEST_CASE("verify_path flags corrupted paths") {
    std::vector<int> m(12, 0);
    m[0] = 2;
    m[1] = 1;
    PathOptions opts;
    opts.verify = false;
    PathReport r = node_transfer_path(m, 0.25, 64, opts);

    // Deleting a block of interior samples breaks adjacency at coarse stepping.
    PathReport broken = r;
    broken.samples.erase(broken.samples.begin() + 20, broken.samples.begin() + 50);
    broken = verify_path(std::move(broken), 3, opts);
    CHECK_FALSE(broken.continuous);

    // Corrupting the class bookkeeping is flagged.
    PathReport wrong = r;
    wrong.samples[5].m[0] += 1;
    wrong = verify_path(std::move(wrong), 3, opts);
    bool found = false;
    for (const auto& v : wrong.invariant_violations)
        found = found || v.find("sum of multiplicities") != std::string::npos;
    CHECK(found);

    // A single-sample path is trivially continuous.
    PathReport single;
    single.samples.push_back(r.samples.front());
    single = verify_path(std::move(single), 3, opts);
    CHECK(single.continuous);
}

TEST_CASE("sigma then sigma-inverse returns to the starting tuple") {
    std::mt19937 rng(21);
    std::vector<int> sigma(12);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<int> inv(12);
    for (int i = 0; i < 12; ++i) inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;

    std::vector<int> m(12, 0);
    m[2] = 2;
    m[7] = 1;
    std::vector<Complex> a = unity_roots();
    PathReport forward = permutation_path(a, sigma, m, Complex(0.25, 0.0), 24);
    REQUIRE(forward.continuous);

    // m rides the points: restart from the permuted tuple with the same m.
    std::vector<Complex> mid = forward.samples.back().params.a;
    PathReport back = permutation_path(mid, inv, m, Complex(0.25, 0.0), 24);
    REQUIRE(back.continuous);

    const auto& last = back.samples.back();
    for (int i = 0; i < 12; ++i) {
        CHECK(std::abs(last.params.a[static_cast<size_t>(i)] - a[static_cast<size_t>(i)]) < 1e-9);
        CHECK(last.m[static_cast<size_t>(i)] == m[static_cast<size_t>(i)]);
    }
}
