#ifndef K3_MODULIPATH_HPP
#define K3_MODULIPATH_HPP

#include <string>
#include <vector>

#include "k3/curves.hpp"
#include "k3/families.hpp"

namespace k3 {

// One sample of a path in the universal space: the family parameters, the
// singular-fibre positions at those parameters, and the curve configuration
// carried along (m parallel to fibres; the implicit section is not listed).
struct ModuliPathSample {
    double t = 0.0;
    FamilyParams params;
    struct Fibre {
        Complex position;
        int multiplicity;  // multiplicity as a discriminant root
    };
    std::vector<Fibre> fibres;
    std::vector<int> m;
    std::string provenance;
};

struct PathReport {
    std::vector<ModuliPathSample> samples;
    bool continuous = false;
    bool endpoint_match = false;
    double endpoint_residual = 0.0;
    std::vector<std::string> invariant_violations;
};

struct PathOptions {
    double sep_eps = 1e-6;     // fibre-separation floor away from declared degenerations
    int retry_budget = 5;      // arc-radius retries for permutation legs
    unsigned seed = 0;         // jitter for retries and root-finder starts
    double tol = 1e-10;        // residual tolerance for tracked roots
    bool verify = true;        // run verify_path on constructed paths
};

// Continuous selection of a root of t^12 = 1 - 2K along a sampled K path,
// by nearest-root matching with adaptive refinement. The seed must be a root
// at the first sample.
std::vector<Complex> track_beta(const std::vector<Complex>& K_path, Complex seed, double tol = 1e-10);

// The 12th roots of unity alpha_n = e^(i pi (n+1) / 6), n = 0..11.
std::vector<Complex> unity_roots();

// Swaps pairs of a-points along semicircular arcs to realize sigma
// (sigma[i] = index of the position where the point starting at a[i] ends),
// carrying the multiplicities with the moving fibres; K fixed.
PathReport permutation_path(const std::vector<Complex>& a, const std::vector<int>& sigma,
                            const std::vector<int>& m, Complex K, int steps, const PathOptions& opts = {});

// K(t) = (1-t) K0 descending to the cuspidal surface at t = 1; m must be
// supported on the 12 static fibres and is transported by position identity.
PathReport cusp_limit_path(const std::vector<Complex>& a, const std::vector<int>& m, double K0, int steps,
                           const PathOptions& opts = {});

// The node-transfer homotopy over the 12th roots of unity: samples
// X at K(s) = (1 - (psi(s) beta)^12)/2 carrying one unit of multiplicity on
// the moving fibre from beta alpha_1 (s=0) to beta alpha_2 (s=1). m must be
// sorted descending with m[1] >= 1; K real in (0, 1/2).
PathReport node_transfer_path(const std::vector<int>& m, double K, int steps, const PathOptions& opts = {});

// Composition: sort m descending (permutation legs), then rounds of
// {cusp exit, node transfer, cusp return} on the cuspidal surface over the
// 12th roots of unity until the configuration is (g, 0, ..., 0).
PathReport connect_to_canonical(const std::vector<int>& m, double K, int steps, const PathOptions& opts = {});

// Fills the verdict fields: per-sample class bookkeeping, fibre separation,
// family validity against freshly computed discriminant roots, and
// consecutive-sample matching with multiplicity and m conservation.
PathReport verify_path(PathReport report, int g, const PathOptions& opts = {});

}  // namespace k3

#endif
