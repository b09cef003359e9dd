#include "k3/modulipath.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "k3/kodaira.hpp"

namespace k3 {

namespace {

std::vector<Complex> twelfth_roots(Complex w) {
    double r = std::pow(std::abs(w), 1.0 / 12.0);
    double th = std::arg(w);
    std::vector<Complex> out(12);
    for (int n = 0; n < 12; ++n) out[static_cast<size_t>(n)] = std::polar(r, (th + 2.0 * M_PI * n) / 12.0);
    return out;
}

std::vector<Complex> monic_from_roots(const std::vector<Complex>& pts) {
    std::vector<Complex> c{Complex(1.0, 0.0)};
    for (Complex p : pts) {
        std::vector<Complex> n(c.size() + 1, Complex(0.0, 0.0));
        for (size_t j = 0; j < c.size(); ++j) {
            n[j] -= p * c[j];
            n[j + 1] += c[j];
        }
        c = std::move(n);
    }
    return c;  // ascending, degree = pts.size()
}

// Greedy global nearest assignment of `pts` to `ref`; returns pts permuted so
// entry i corresponds to ref[i].
std::vector<Complex> align_to(const std::vector<Complex>& ref, const std::vector<Complex>& pts) {
    const size_t n = ref.size();
    std::vector<Complex> out(n);
    std::vector<bool> used_ref(n, false), used_pt(n, false);
    for (size_t round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < n; ++i) {
            if (used_ref[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (used_pt[j]) continue;
                double d = std::abs(ref[i] - pts[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_ref[bi] = used_pt[bj] = true;
        out[bi] = pts[bj];
    }
    return out;
}

// Moving fibres of X_{(a),K}: roots of prod(t - a_i) + 2K, aligned to the
// previous positions when given.
std::vector<Complex> beta_fibres(const std::vector<Complex>& pts, Complex K, const std::vector<Complex>& prev,
                                 unsigned seed) {
    std::vector<Complex> q = monic_from_roots(pts);
    q[0] += 2.0 * K;
    std::vector<Complex> roots = univariate_roots(q, prev, 400, seed);
    if (roots.size() != pts.size())
        throw Error("modulipath", "beta_fibres", "unexpected root count for the moving fibres");
    return prev.empty() ? roots : align_to(prev, roots);
}

ModuliPathSample nodal_sample(const std::vector<Complex>& pts, Complex K, const std::vector<Complex>& movers,
                              const std::vector<int>& m_static, int unit_mover, std::string provenance) {
    ModuliPathSample s;
    s.params = {pts, K};
    for (size_t i = 0; i < pts.size(); ++i) {
        s.fibres.push_back({pts[i], 1});
        s.m.push_back(m_static[i]);
    }
    for (size_t i = 0; i < movers.size(); ++i) {
        s.fibres.push_back({movers[i], 1});
        s.m.push_back(static_cast<int>(i) == unit_mover ? 1 : 0);
    }
    s.provenance = std::move(provenance);
    return s;
}

ModuliPathSample cusp_sample(const std::vector<Complex>& pts, const std::vector<int>& m, std::string provenance) {
    ModuliPathSample s;
    s.params = {pts, Complex(0.0, 0.0)};
    for (size_t i = 0; i < pts.size(); ++i) {
        s.fibres.push_back({pts[i], 2});
        s.m.push_back(m[i]);
    }
    s.provenance = std::move(provenance);
    return s;
}

void normalize_times(std::vector<ModuliPathSample>& samples) {
    const size_t n = samples.size();
    for (size_t i = 0; i < n; ++i) samples[i].t = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
}

// Generalized cusp leg: K moves between K0 and 0 (reversed = away from the
// cusp). An optional unit of multiplicity rides the moving fibre merging
// into (or emerging from) static fibre `unit`; it is the C_K / D_K limit
// geometry of the transfer rounds.
std::vector<ModuliPathSample> cusp_leg(const std::vector<Complex>& a, const std::vector<int>& m_static, int unit,
                                       double K0, int steps, bool reversed, const PathOptions& opts,
                                       const std::string& provenance) {
    std::vector<ModuliPathSample> out;
    std::vector<Complex> movers;
    std::vector<int> m_cusp = m_static;
    if (unit >= 0) m_cusp[static_cast<size_t>(unit)] += 1;

    for (int i = 0; i <= steps; ++i) {
        double tau = static_cast<double>(i) / steps;
        double K = reversed ? tau * K0 : (1.0 - tau) * K0;
        if (K == 0.0) {
            out.push_back(cusp_sample(a, m_cusp, provenance));
            continue;
        }
        movers = beta_fibres(a, Complex(K, 0.0), movers, opts.seed);
        if (movers.empty()) throw Error("modulipath", "cusp_limit_path", "lost track of moving fibres");
        if ((reversed && i == 1) || (!reversed && i == 0)) movers = align_to(a, movers);  // index mover n by its static
        out.push_back(nodal_sample(a, Complex(K, 0.0), movers, m_static, unit, provenance));
    }
    return out;
}

std::vector<ModuliPathSample> reversed_samples(std::vector<ModuliPathSample> samples) {
    std::reverse(samples.begin(), samples.end());
    for (auto& s : samples) s.provenance += "[rev]";
    return samples;
}

void append_leg(std::vector<ModuliPathSample>& all, std::vector<ModuliPathSample> leg) {
    size_t start = all.empty() ? 0 : 1;  // junction sample repeats the current state
    for (size_t i = start; i < leg.size(); ++i) all.push_back(std::move(leg[i]));
}

double matched_param_distance(const FamilyParams& p, const FamilyParams& q) {
    std::vector<Complex> aligned = align_to(p.a, q.a);
    double d = std::abs(p.K - q.K);
    for (size_t i = 0; i < p.a.size(); ++i) d = std::max(d, std::abs(p.a[i] - aligned[i]));
    return d;
}

bool is_sorted_desc(const std::vector<int>& m) {
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] > m[i - 1]) return false;
    return true;
}

}  // namespace

std::vector<Complex> unity_roots() {
    std::vector<Complex> a(12);
    for (int n = 0; n < 12; ++n) a[static_cast<size_t>(n)] = std::polar(1.0, M_PI * (n + 1) / 6.0);
    return a;
}

std::vector<Complex> track_beta(const std::vector<Complex>& K_path, Complex seed, double tol) {
    if (K_path.empty()) throw Error("modulipath", "track_beta", "empty K path");

    auto advance = [&](Complex K_from, Complex K_to, Complex beta, int depth, auto&& self) -> Complex {
        Complex w = Complex(1.0, 0.0) - 2.0 * K_to;
        if (std::abs(w) < 1e-14) throw DegenerateKError("K = 1/2: the roots of t^12 = 1 - 2K collapse");
        std::vector<Complex> roots = twelfth_roots(w);
        double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
        Complex best(0.0, 0.0);
        for (Complex r : roots) {
            double d = std::abs(r - beta);
            if (d < d1) {
                d2 = d1;
                d1 = d;
                best = r;
            } else if (d < d2) {
                d2 = d;
            }
        }
        double spacing = 2.0 * std::pow(std::abs(w), 1.0 / 12.0) * std::sin(M_PI / 12.0);
        if (d1 <= 0.25 * spacing) return best;
        if (depth <= 0)
            throw BranchAmbiguityError("root matching ambiguous after refinement budget (displacement " +
                                       std::to_string(d1) + ")");
        Complex mid_K = 0.5 * (K_from + K_to);
        Complex mid = self(K_from, mid_K, beta, depth - 1, self);
        return self(mid_K, K_to, mid, depth - 1, self);
    };

    Complex w0 = Complex(1.0, 0.0) - 2.0 * K_path[0];
    if (std::abs(w0) < 1e-14) throw DegenerateKError("K = 1/2 at the first sample");
    Complex seed12 = std::pow(seed, 12);
    if (std::abs(seed12 - w0) > std::max(tol, 1e-8) * (1.0 + std::abs(w0)))
        throw Error("modulipath", "track_beta", "seed is not a root of t^12 = 1 - 2K at the first sample");

    std::vector<Complex> out;
    Complex beta = advance(K_path[0], K_path[0], seed, 0, advance);  // snap seed onto the exact root
    out.push_back(beta);
    for (size_t i = 1; i < K_path.size(); ++i) {
        beta = advance(K_path[i - 1], K_path[i], beta, 40, advance);
        out.push_back(beta);
    }
    for (size_t i = 0; i < out.size(); ++i) {
        Complex w = Complex(1.0, 0.0) - 2.0 * K_path[i];
        if (std::abs(std::pow(out[i], 12) - w) > tol * (1.0 + std::abs(w)))
            throw Error("modulipath", "track_beta", "tracked root residual above tolerance");
    }
    return out;
}

PathReport permutation_path(const std::vector<Complex>& a, const std::vector<int>& sigma,
                            const std::vector<int>& m, Complex K, int steps, const PathOptions& opts) {
    if (a.size() != 12 || sigma.size() != 12 || m.size() != 12)
        throw Error("modulipath", "permutation_path", "expected 12 points, a permutation of 12 and 12 multiplicities");
    if (steps < 2) throw Error("modulipath", "permutation_path", "steps must be at least 2");
    {
        std::vector<int> seen(12, 0);
        for (int s : sigma) {
            if (s < 0 || s >= 12 || seen[static_cast<size_t>(s)]++)
                throw Error("modulipath", "permutation_path", "sigma is not a permutation");
        }
    }
    if (K == Complex(0.0, 0.0)) throw Error("modulipath", "permutation_path", "K must be nonzero");

    // Decompose sigma into position transpositions by selection: point i must
    // end at the position slot sigma[i].
    std::vector<int> inv(12), occupant(12), pos_of(12);
    for (int i = 0; i < 12; ++i) inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
    std::iota(occupant.begin(), occupant.end(), 0);
    std::iota(pos_of.begin(), pos_of.end(), 0);
    std::vector<std::pair<int, int>> swaps;
    for (int x = 0; x < 12; ++x) {
        int want = inv[static_cast<size_t>(x)];
        if (occupant[static_cast<size_t>(x)] == want) continue;
        int y = pos_of[static_cast<size_t>(want)];
        swaps.emplace_back(x, y);
        int u = occupant[static_cast<size_t>(x)];
        std::swap(occupant[static_cast<size_t>(x)], occupant[static_cast<size_t>(y)]);
        pos_of[static_cast<size_t>(want)] = x;
        pos_of[static_cast<size_t>(u)] = y;
    }

    PathReport report;
    std::vector<Complex> pts = a;  // by point id
    std::vector<Complex> movers;

    auto emit = [&](const std::vector<Complex>& cur, const std::string& prov) {
        movers = beta_fibres(cur, K, movers, opts.seed);
        report.samples.push_back(nodal_sample(cur, K, movers, m, -1, prov));
    };

    if (swaps.empty()) {
        for (int i = 0; i <= steps; ++i) emit(pts, "perm[identity]");
    }

    for (size_t leg = 0; leg < swaps.size(); ++leg) {
        auto [x, y] = swaps[leg];
        // The two travelling point ids: between legs every point sits exactly
        // on one of the original position values, so nearest lookup is exact.
        int u = -1, v = -1;
        double bu = 1e300, bv = 1e300;
        for (int i = 0; i < 12; ++i) {
            double du = std::abs(pts[static_cast<size_t>(i)] - a[static_cast<size_t>(x)]);
            double dv = std::abs(pts[static_cast<size_t>(i)] - a[static_cast<size_t>(y)]);
            if (du < bu) {
                bu = du;
                u = i;
            }
            if (dv < bv) {
                bv = dv;
                v = i;
            }
        }
        std::string prov = "perm[leg " + std::to_string(leg + 1) + "/" + std::to_string(swaps.size()) + " (" +
                           std::to_string(x + 1) + " " + std::to_string(y + 1) + ")]";

        Complex start_u = pts[static_cast<size_t>(u)], start_v = pts[static_cast<size_t>(v)];
        Complex mu = 0.5 * (start_u + start_v), h = start_u - mu;
        double radfac = 1.25;
        for (int attempt = 0;; ++attempt) {
            bool collided = false;
            std::vector<std::vector<Complex>> leg_states;
            for (int i = (report.samples.empty() && leg == 0 ? 0 : 1); i <= steps; ++i) {
                double s = static_cast<double>(i) / steps;
                double rho = 1.0 + (radfac - 1.0) * std::sin(M_PI * s);
                Complex rot = std::polar(rho, M_PI * s);
                std::vector<Complex> cur = pts;
                cur[static_cast<size_t>(u)] = mu + h * rot;
                cur[static_cast<size_t>(v)] = mu - h * rot;
                if (min_pairwise_distance(cur) <= opts.sep_eps) {
                    collided = true;
                    break;
                }
                leg_states.push_back(std::move(cur));
            }
            if (!collided) {
                for (auto& st : leg_states) emit(st, prov);
                break;
            }
            if (attempt >= opts.retry_budget)
                throw CollisionError("permutation_path", "a-points collide for every tried arc radius");
            radfac *= 1.35;
        }
        pts[static_cast<size_t>(u)] = start_v;
        pts[static_cast<size_t>(v)] = start_u;
    }

    normalize_times(report.samples);

    // Endpoint check: the permuted tuple defines the same surface.
    WeierstrassData w0 = nodal_family(a, K);
    WeierstrassData w1 = nodal_family(report.samples.back().params.a, K);
    double res = 0.0;
    for (int i = 0; i <= 12; ++i)
        res = std::max(res, std::abs(w0.B().coeffs()[static_cast<size_t>(i)] - w1.B().coeffs()[static_cast<size_t>(i)]));
    res /= std::max(w0.B().max_coeff_norm(), 1e-30);
    report.endpoint_residual = res;
    report.endpoint_match = res < 1e-9;

    if (opts.verify) {
        int g = 0;
        for (int mi : m) g += mi;
        return verify_path(std::move(report), g, opts);
    }
    return report;
}

PathReport cusp_limit_path(const std::vector<Complex>& a, const std::vector<int>& m, double K0, int steps,
                           const PathOptions& opts) {
    if (a.size() != 12 || m.size() != 12)
        throw Error("modulipath", "cusp_limit_path", "expected 12 points and 12 multiplicities");
    if (!(K0 > 0.0 && K0 < 0.5)) throw Error("modulipath", "cusp_limit_path", "K0 must lie in (0, 1/2)");
    if (steps < 2) throw Error("modulipath", "cusp_limit_path", "steps must be at least 2");

    PathReport report;
    report.samples = cusp_leg(a, m, -1, K0, steps, false, opts, "cusp_limit[K0=" + std::to_string(K0) + "]");
    normalize_times(report.samples);

    // Endpoint: the limit surface is the cuspidal family; every static fibre
    // becomes type II at the same position.
    FibreReport fr = fibre_report(cuspidal_family(a));
    double res = 0.0;
    bool types_ok = fr.fibres.size() == 12;
    for (const auto& f : fr.fibres) {
        types_ok = types_ok && f.type == KodairaType{KodairaTag::II};
        double best = std::numeric_limits<double>::infinity();
        ProjPoint p = f.position.normalized();
        Complex pos = p.p0() / p.p1();
        for (Complex ai : a) best = std::min(best, std::abs(pos - ai));
        res = std::max(res, best);
    }
    report.endpoint_residual = res;
    report.endpoint_match = types_ok && res < 1e-8;

    if (opts.verify) {
        int g = 0;
        for (int mi : m) g += mi;
        return verify_path(std::move(report), g, opts);
    }
    return report;
}

PathReport node_transfer_path(const std::vector<int>& m, double K, int steps, const PathOptions& opts) {
    if (m.size() != 12) throw Error("modulipath", "node_transfer_path", "expected 12 multiplicities");
    if (!is_sorted_desc(m)) throw Error("modulipath", "node_transfer_path", "multiplicities must be sorted descending");
    if (m[1] < 1) throw Error("modulipath", "node_transfer_path", "m_2 >= 1 is required for a transfer");
    if (!(K > 0.0 && K < 0.5)) throw Error("modulipath", "node_transfer_path", "K must be real in (0, 1/2)");
    if (steps < 2) throw Error("modulipath", "node_transfer_path", "steps must be at least 2");

    const std::vector<Complex> alpha = unity_roots();
    const double beta = std::pow(1.0 - 2.0 * K, 1.0 / 12.0);
    std::vector<int> m_static = m;
    m_static[1] -= 1;

    PathReport report;
    std::vector<Complex> movers;
    std::vector<Complex> analytic(12);
    for (int n = 0; n < 12; ++n) analytic[static_cast<size_t>(n)] = beta * alpha[static_cast<size_t>(n)];

    for (int i = 0; i <= steps; ++i) {
        double s = static_cast<double>(i) / steps;
        Complex phase = std::polar(1.0, 2.0 * M_PI * s);
        Complex Ks = 0.5 * (1.0 - (1.0 - 2.0 * K) * phase);
        movers = beta_fibres(alpha, Ks, movers, opts.seed);
        if (i == 0) movers = align_to(analytic, movers);
        report.samples.push_back(nodal_sample(alpha, Ks, movers, m_static, 0, "node_transfer"));
    }
    normalize_times(report.samples);

    Complex start_pos = report.samples.front().fibres[12].position;
    Complex end_pos = report.samples.back().fibres[12].position;
    double r0 = std::abs(start_pos - beta * alpha[0]);
    double r1 = std::abs(end_pos - beta * alpha[1]);
    report.endpoint_residual = std::max(r0, r1);
    report.endpoint_match = report.endpoint_residual < 1e-8;

    if (opts.verify) {
        int g = 0;
        for (int mi : m) g += mi;
        return verify_path(std::move(report), g, opts);
    }
    return report;
}

PathReport connect_to_canonical(const std::vector<int>& m, double K, int steps, const PathOptions& opts) {
    if (m.size() != 12) throw Error("modulipath", "connect_to_canonical", "expected 12 multiplicities");
    if (!(K > 0.0 && K < 0.5)) throw Error("modulipath", "connect_to_canonical", "K must be real in (0, 1/2)");
    int g = 0;
    for (int mi : m) {
        if (mi < 0) throw Error("modulipath", "connect_to_canonical", "multiplicities must be nonnegative");
        g += mi;
    }
    if (g < 1) throw Error("modulipath", "connect_to_canonical", "total multiplicity must be positive");

    const std::vector<Complex> alpha = unity_roots();
    PathOptions inner = opts;
    inner.verify = false;

    PathReport report;
    std::vector<int> cur = m;  // position-indexed over the canonical slots
    report.samples.push_back(cusp_sample(alpha, cur, "connect[start]"));

    int guard = 0;
    while (true) {
        if (++guard > 16 * g + 16)
            throw Error("modulipath", "connect_to_canonical", "composition failed to terminate");
        if (!is_sorted_desc(cur)) {
            // Sort round: exit the cusp, permute the points, return.
            std::vector<int> order(12);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int i, int j) { return cur[static_cast<size_t>(i)] > cur[static_cast<size_t>(j)]; });
            std::vector<int> sigma(12);
            for (int rank = 0; rank < 12; ++rank) sigma[static_cast<size_t>(order[static_cast<size_t>(rank)])] = rank;
            std::vector<int> sorted(12);
            for (int rank = 0; rank < 12; ++rank)
                sorted[static_cast<size_t>(rank)] = cur[static_cast<size_t>(order[static_cast<size_t>(rank)])];

            append_leg(report.samples, cusp_leg(alpha, cur, -1, K, steps, true, inner, "connect[sort exit]"));
            PathReport perm = permutation_path(alpha, sigma, cur, Complex(K, 0.0), steps, inner);
            append_leg(report.samples, std::move(perm.samples));
            append_leg(report.samples, cusp_leg(alpha, sorted, -1, K, steps, false, inner, "connect[sort return]"));
            cur = sorted;
            continue;
        }
        if (cur[1] == 0) break;

        // Transfer round: one unit of multiplicity moves from slot 2 to slot 1.
        std::vector<int> m_static = cur;
        m_static[1] -= 1;
        append_leg(report.samples, cusp_leg(alpha, m_static, 1, K, steps, true, inner, "connect[transfer exit]"));
        PathReport transfer = node_transfer_path(cur, K, steps, inner);
        append_leg(report.samples, reversed_samples(std::move(transfer.samples)));
        append_leg(report.samples, cusp_leg(alpha, m_static, 0, K, steps, false, inner, "connect[transfer return]"));
        cur[0] += 1;
        cur[1] -= 1;
    }

    normalize_times(report.samples);

    const ModuliPathSample& last = report.samples.back();
    double res = 0.0;
    bool canonical = last.m.size() == 12 && last.m[0] == g;
    for (size_t i = 1; i < 12; ++i) canonical = canonical && last.m[i] == 0;
    for (size_t i = 0; i < 12; ++i) res = std::max(res, std::abs(last.fibres[i].position - alpha[i]));
    report.endpoint_residual = res;
    report.endpoint_match = canonical && res < 1e-8;

    if (opts.verify) return verify_path(std::move(report), g, opts);
    return report;
}

namespace {

// Perfect matching (Kuhn's augmenting paths) where fibre i may pair with
// fibre j only if they sit within eps and agree in multiplicity and carried
// m. Close encounters are then resolved by the conserved labels instead of
// bare distance.
bool bijective_transport(const std::vector<ModuliPathSample::Fibre>& from, const std::vector<int>& m_from,
                         const std::vector<ModuliPathSample::Fibre>& to, const std::vector<int>& m_to,
                         double eps) {
    const size_t n = from.size();
    if (to.size() != n) return false;
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (std::abs(from[i].position - to[j].position) <= eps && from[i].multiplicity == to[j].multiplicity &&
                m_from[i] == m_to[j])
                adj[i].push_back(static_cast<int>(j));
    std::vector<int> match_to(n, -1);
    std::function<bool(size_t, std::vector<bool>&)> try_kuhn = [&](size_t i, std::vector<bool>& used) {
        for (int j : adj[i]) {
            if (used[static_cast<size_t>(j)]) continue;
            used[static_cast<size_t>(j)] = true;
            if (match_to[static_cast<size_t>(j)] < 0 ||
                try_kuhn(static_cast<size_t>(match_to[static_cast<size_t>(j)]), used)) {
                match_to[static_cast<size_t>(j)] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> used(n, false);
        if (!try_kuhn(i, used)) return false;
    }
    return true;
}

// Many-to-one transport for merge/split steps: every `from` fibre maps to its
// nearest `to` fibre, and each target must receive exactly its multiplicity
// and m mass.
bool aggregate_transport(const std::vector<ModuliPathSample::Fibre>& from, const std::vector<int>& m_from,
                         const std::vector<ModuliPathSample::Fibre>& to, const std::vector<int>& m_to,
                         double eps) {
    std::vector<int> mult_sum(to.size(), 0);
    std::vector<int> m_sum(to.size(), 0);
    for (size_t i = 0; i < from.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        size_t bj = 0;
        for (size_t j = 0; j < to.size(); ++j) {
            double d = std::abs(from[i].position - to[j].position);
            if (d < best) {
                best = d;
                bj = j;
            }
        }
        if (best > eps) return false;
        mult_sum[bj] += from[i].multiplicity;
        m_sum[bj] += m_from[i];
    }
    for (size_t j = 0; j < to.size(); ++j)
        if (mult_sum[j] != to[j].multiplicity || m_sum[j] != m_to[j]) return false;
    return true;
}

bool fibres_match(const std::vector<ModuliPathSample::Fibre>& from, const std::vector<int>& m_from,
                  const std::vector<ModuliPathSample::Fibre>& to, const std::vector<int>& m_to, double eps) {
    if (bijective_transport(from, m_from, to, m_to, eps)) return true;
    return aggregate_transport(from, m_from, to, m_to, eps) || aggregate_transport(to, m_to, from, m_from, eps);
}

}  // namespace

PathReport verify_path(PathReport report, int g, const PathOptions& opts) {
    auto& viol = report.invariant_violations;
    viol.clear();
    if (report.samples.empty()) {
        viol.push_back("path has no samples");
        report.continuous = false;
        return report;
    }

    // Nominal per-sample displacement, per leg: legs move at different
    // parameter speeds, and a corrupted path must not widen its own
    // tolerance through the gap it introduced, so each leg's scale is the
    // median step within its provenance label.
    std::vector<double> steps;
    for (size_t i = 1; i < report.samples.size(); ++i)
        steps.push_back(matched_param_distance(report.samples[i - 1].params, report.samples[i].params));
    auto median_of = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    };
    std::map<std::string, std::vector<double>> by_leg;
    for (size_t i = 1; i < report.samples.size(); ++i)
        if (report.samples[i - 1].provenance == report.samples[i].provenance)
            by_leg[report.samples[i].provenance].push_back(steps[i - 1]);
    std::map<std::string, double> leg_nominal;
    for (auto& [label, v] : by_leg) leg_nominal[label] = median_of(v);
    double global_nominal = median_of(steps);
    auto eps_cont_at = [&](size_t i) {
        auto it_prev = leg_nominal.find(report.samples[i - 1].provenance);
        auto it_cur = leg_nominal.find(report.samples[i].provenance);
        double nominal = 0.0;
        if (it_prev != leg_nominal.end()) nominal = std::max(nominal, it_prev->second);
        if (it_cur != leg_nominal.end()) nominal = std::max(nominal, it_cur->second);
        if (nominal == 0.0) nominal = global_nominal;
        return std::max(10.0 * nominal, 1e-9);
    };

    const double pos_tol = 1e-6;
    for (size_t i = 0; i < report.samples.size(); ++i) {
        const ModuliPathSample& s = report.samples[i];
        auto tag = [&](const std::string& what) { viol.push_back("sample " + std::to_string(i) + ": " + what); };

        int total = 0;
        for (size_t j = 0; j < s.m.size(); ++j) total += s.m[j];
        if (total != g) tag("sum of multiplicities is " + std::to_string(total) + ", expected " + std::to_string(g));
        if (s.m.size() != s.fibres.size()) tag("m is not parallel to the fibre list");

        double minsep = std::numeric_limits<double>::infinity();
        for (size_t x = 0; x < s.fibres.size(); ++x)
            for (size_t y = x + 1; y < s.fibres.size(); ++y)
                minsep = std::min(minsep, std::abs(s.fibres[x].position - s.fibres[y].position));
        if (s.fibres.size() > 1 && minsep <= opts.sep_eps)
            tag("fibre separation " + std::to_string(minsep) + " below eps_sep");

        // Family validity: recompute the discriminant roots and match them
        // against the claimed fibre positions.
        try {
            std::vector<Complex> warm;
            for (const auto& f : s.fibres)
                for (int c = 0; c < f.multiplicity; ++c)
                    warm.push_back(f.position + 1e-7 * static_cast<double>(c) * Complex(1.0, 1.0));
            RootOptions ropts;
            ropts.warm_start = std::move(warm);
            bool cuspidal = s.params.K == Complex(0.0, 0.0);
            WeierstrassData w = cuspidal ? cuspidal_family(s.params.a) : nodal_family(s.params.a, s.params.K);
            std::vector<RootMult> roots = roots_with_multiplicity(w.delta(), 1e-8, ropts);
            if (cuspidal) {
                if (roots.size() != 12) tag("cuspidal sample does not have 12 double fibres");
            } else {
                if (roots.size() != 24) tag("family has " + std::to_string(roots.size()) +
                                            " distinct singular fibres, expected 24");
            }
            std::vector<ModuliPathSample::Fibre> computed;
            for (const auto& r : roots) {
                ProjPoint p = r.point.normalized();
                if (std::abs(p.p1()) < 0.5) {
                    tag("computed singular fibre at infinity");
                    continue;
                }
                computed.push_back({p.p0() / p.p1(), r.multiplicity});
            }
            std::vector<int> zero_m(computed.size(), 0), claimed_zero(s.fibres.size(), 0);
            if (!fibres_match(computed, zero_m, s.fibres, claimed_zero, pos_tol))
                tag("claimed fibre positions disagree with the discriminant roots");
        } catch (const Error& e) {
            tag(std::string("family validation failed: ") + e.what());
        }

        if (i > 0) {
            const ModuliPathSample& prev = report.samples[i - 1];
            double eps_cont = eps_cont_at(i);
            if (steps[i - 1] > eps_cont) tag("family parameter jump above eps_cont");
            if (!fibres_match(prev.fibres, prev.m, s.fibres, s.m, eps_cont)) tag("fibre transport discontinuity");
        }
    }

    report.continuous = viol.empty();
    return report;
}

}  // namespace k3
