#include "k3/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace k3 {

namespace {

constexpr double kEps = 2.220446049250313e-16;

double cabs(Complex z) { return std::abs(z); }

// Evaluate p (ascending) and its derivative at z by Horner.
std::pair<Complex, Complex> horner2(const std::vector<Complex>& p, Complex z) {
    Complex v(0.0, 0.0), d(0.0, 0.0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        d = d * z + v;
        v = v * z + p[static_cast<size_t>(i)];
    }
    return {v, d};
}

// Noise envelope of Horner evaluation under relative coefficient
// uncertainty eps_c: eps_c * sum |c_i| |z|^i.
double eval_envelope(const std::vector<Complex>& p, Complex z, double eps_c) {
    double az = cabs(z), pw = 1.0, s = 0.0;
    for (const auto& c : p) {
        s += cabs(c) * pw;
        pw *= az;
    }
    return eps_c * s;
}

// Envelope for coefficients that are themselves computed values carrying
// absolute error of order eps_c * max|c| (products and cancellations spread
// the largest magnitude everywhere): eps_c * max|c| * sum |z|^i.
double coefficient_noise_envelope(const std::vector<Complex>& p, Complex z, double eps_c) {
    double maxc = 0.0;
    for (const auto& c : p) maxc = std::max(maxc, cabs(c));
    double az = cabs(z), pw = 1.0, s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        s += pw;
        pw *= az;
    }
    return eps_c * maxc * s;
}

std::vector<Complex> trim_univariate(std::vector<Complex> p, double rel_tol) {
    double m = 0.0;
    for (const auto& c : p) m = std::max(m, cabs(c));
    while (!p.empty() && cabs(p.back()) <= rel_tol * m) p.pop_back();
    return p;
}

std::vector<Complex> derive_univariate(const std::vector<Complex>& p) {
    if (p.size() <= 1) return {};
    std::vector<Complex> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

// Aberth-Ehrlich simultaneous iteration on a monic-normalized polynomial.
// Per-root stop: correction below roundoff, or residual at the noise floor.
std::vector<Complex> aberth(const std::vector<Complex>& poly, const std::vector<Complex>& warm,
                            int max_iter, unsigned seed) {
    const int n = static_cast<int>(poly.size()) - 1;
    std::vector<Complex> p(poly);
    Complex lead = p.back();
    for (auto& c : p) c /= lead;

    std::vector<Complex> z(static_cast<size_t>(n));
    if (static_cast<int>(warm.size()) == n) {
        z = warm;
    } else {
        double radius = 1.0;
        for (int i = 0; i < n; ++i) radius = std::max(radius, cabs(p[static_cast<size_t>(i)]));
        radius = 1.0 + radius;
        std::mt19937 rng(seed * 2654435761u + 1u);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double phase = 0.4 + 0.1 * uni(rng);
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * M_PI * k / n + phase;
            z[static_cast<size_t>(k)] = radius * Complex(std::cos(th), std::sin(th));
        }
    }

    std::vector<bool> done(static_cast<size_t>(n), false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            if (done[static_cast<size_t>(k)]) continue;
            Complex zk = z[static_cast<size_t>(k)];
            auto [val, der] = horner2(p, zk);
            double floor_k = 4.0 * n * eval_envelope(p, zk, kEps);
            if (cabs(val) <= floor_k) {
                done[static_cast<size_t>(k)] = true;
                continue;
            }
            Complex newton;
            if (der == Complex(0.0, 0.0)) {
                newton = Complex(1e-8, 1e-8);
            } else {
                newton = val / der;
            }
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex diff = zk - z[static_cast<size_t>(j)];
                if (cabs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                sum += Complex(1.0, 0.0) / diff;
            }
            Complex denom = Complex(1.0, 0.0) - newton * sum;
            Complex w = (cabs(denom) < 1e-300) ? newton : newton / denom;
            z[static_cast<size_t>(k)] = zk - w;
            if (cabs(w) <= 1e-15 * (1.0 + cabs(zk)))
                done[static_cast<size_t>(k)] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    return z;
}

struct Cluster {
    Complex center;
    int size;
};

// Inclusion-radius clustering. R_k bounds the distance from z_k to a true
// root of some polynomial within the coefficient noise ball; components of
// overlapping disks are merged, with a hard relative cap so legitimately
// separated roots are never absorbed.
std::vector<Cluster> cluster_roots(const std::vector<Complex>& poly, const std::vector<Complex>& z,
                                   double cluster_radius) {
    const int n = static_cast<int>(z.size());
    std::vector<Complex> p(poly);
    Complex lead = p.back();
    for (auto& c : p) c /= lead;

    std::vector<double> radius(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        Complex zk = z[static_cast<size_t>(k)];
        auto [val, der] = horner2(p, zk);
        (void)der;
        double noise = cabs(val) + coefficient_noise_envelope(p, zk, 4.0 * kEps);
        double logprod = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            logprod += std::log(std::max(cabs(zk - z[static_cast<size_t>(j)]), 1e-300));
        }
        double logr = std::log(std::max(noise, 1e-300)) + std::log(static_cast<double>(n)) - logprod;
        radius[static_cast<size_t>(k)] = std::exp(std::min(logr, 700.0));
    }

    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    const double cap_rel = 0.25;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            double dist = cabs(z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)]);
            double local = std::max({1.0, cabs(z[static_cast<size_t>(j)]), cabs(z[static_cast<size_t>(k)])});
            double merge_r = std::max(cluster_radius * local,
                                      std::min(radius[static_cast<size_t>(j)] + radius[static_cast<size_t>(k)],
                                               cap_rel * local));
            if (dist <= merge_r) parent[static_cast<size_t>(find(j))] = find(k);
        }
    }

    std::vector<Cluster> out;
    std::vector<int> root_of(static_cast<size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
        int r = find(k);
        if (root_of[static_cast<size_t>(r)] < 0) {
            root_of[static_cast<size_t>(r)] = static_cast<int>(out.size());
            out.push_back({Complex(0.0, 0.0), 0});
        }
        Cluster& c = out[static_cast<size_t>(root_of[static_cast<size_t>(r)])];
        c.center += z[static_cast<size_t>(k)];
        c.size += 1;
    }
    for (auto& c : out) c.center /= static_cast<double>(c.size);
    return out;
}

// Newton polish of a multiplicity-m cluster center on the (m-1)-th
// derivative, where the root is simple.
Complex refine_cluster_center(const std::vector<Complex>& poly, Complex center, int mult) {
    std::vector<Complex> g(poly);
    for (int i = 1; i < mult; ++i) g = derive_univariate(g);
    Complex zc = center;
    for (int it = 0; it < 40; ++it) {
        auto [val, der] = horner2(g, zc);
        if (cabs(der) < 1e-300) break;
        Complex step = val / der;
        zc -= step;
        if (cabs(step) <= 1e-16 * (1.0 + cabs(zc))) break;
    }
    if (cabs(zc - center) > 0.5 * (1.0 + cabs(center))) return center;  // refinement ran away
    return zc;
}

double relative_residual(const BinaryForm& f, const ProjPoint& p) {
    ProjPoint q = p.normalized();
    double scale = f.max_coeff_norm();
    if (scale == 0.0) return 0.0;
    return std::abs(evaluate(f, q)) / scale;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(Complex p0, Complex p1) : p0_(p0), p1_(p1) {
    if (p0_ == Complex(0.0, 0.0) && p1_ == Complex(0.0, 0.0))
        throw Error("forms", "ProjPoint", "(0,0) is not a point of P^1");
}

ProjPoint::ProjPoint(RationalComplex p0, RationalComplex p1) {
    if (p0.is_zero() && p1.is_zero()) throw Error("forms", "ProjPoint", "(0,0) is not a point of P^1");
    p0_ = p0.to_complex();
    p1_ = p1.to_complex();
    exact_ = std::make_pair(std::move(p0), std::move(p1));
}

const std::pair<RationalComplex, RationalComplex>& ProjPoint::exact_coords() const {
    if (!exact_) throw Error("forms", "ProjPoint", "point has no exact coordinates");
    return *exact_;
}

ProjPoint ProjPoint::normalized() const {
    if (exact_) {
        const auto& [e0, e1] = *exact_;
        Rational n0 = e0.re * e0.re + e0.im * e0.im;
        Rational n1 = e1.re * e1.re + e1.im * e1.im;
        if (n1 >= n0) return {e0 / e1, RationalComplex(1)};
        return {RationalComplex(1), e1 / e0};
    }
    if (std::abs(p1_) >= std::abs(p0_)) return {p0_ / p1_, Complex(1.0, 0.0)};
    return {Complex(1.0, 0.0), p1_ / p0_};
}

bool ProjPoint::at_infinity(double tol) const {
    ProjPoint q = normalized();
    return std::abs(q.p1()) <= tol;
}

bool ProjPoint::same_point(const ProjPoint& other, double tol) const {
    if (exact_ && other.exact_) {
        const auto& [a0, a1] = *exact_;
        const auto& [b0, b1] = *other.exact_;
        return (a0 * b1 - a1 * b0).is_zero();
    }
    ProjPoint a = normalized(), b = other.normalized();
    return std::abs(a.p0() * b.p1() - a.p1() * b.p0()) <= tol;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(std::vector<Complex> coeffs) {
    if (coeffs.empty()) throw Error("forms", "BinaryForm", "coefficient sequence must be nonempty");
    degree_ = static_cast<int>(coeffs.size()) - 1;
    coeffs_ = std::move(coeffs);
}

BinaryForm::BinaryForm(std::vector<RationalComplex> coeffs) {
    if (coeffs.empty()) throw Error("forms", "BinaryForm", "coefficient sequence must be nonempty");
    degree_ = static_cast<int>(coeffs.size()) - 1;
    coeffs_.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = coeffs[i].to_complex();
    exact_ = std::move(coeffs);
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(std::vector<RationalComplex>(static_cast<size_t>(degree) + 1));
}

BinaryForm BinaryForm::monomial(int degree, int index, Complex value) {
    std::vector<Complex> c(static_cast<size_t>(degree) + 1, Complex(0.0, 0.0));
    c[static_cast<size_t>(index)] = value;
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::linear(Complex a) { return BinaryForm(std::vector<Complex>{Complex(1.0, 0.0), -a}); }

BinaryForm BinaryForm::linear(const RationalComplex& a) {
    return BinaryForm(std::vector<RationalComplex>{RationalComplex(1), -a});
}

const std::vector<RationalComplex>& BinaryForm::exact_coeffs() const {
    if (!exact_) throw Error("forms", "BinaryForm", "form has no exact coefficients");
    return *exact_;
}

bool BinaryForm::is_zero() const {
    if (exact_) {
        for (const auto& c : *exact_)
            if (!c.is_zero()) return false;
        return true;
    }
    for (const auto& c : coeffs_)
        if (c != Complex(0.0, 0.0)) return false;
    return true;
}

double BinaryForm::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

int BinaryForm::order_at_infinity(double rel_tol) const {
    if (exact_) {
        for (size_t i = 0; i < exact_->size(); ++i)
            if (!(*exact_)[i].is_zero()) return static_cast<int>(i);
        return order_infinity;
    }
    double m = max_coeff_norm();
    if (m == 0.0) return order_infinity;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (std::abs(coeffs_[i]) > rel_tol * m) return static_cast<int>(i);
    return order_infinity;
}

std::vector<Complex> BinaryForm::dehomogenize(int chart) const {
    std::vector<Complex> u(coeffs_.size());
    for (size_t j = 0; j < coeffs_.size(); ++j)
        u[j] = (chart == 0) ? coeffs_[coeffs_.size() - 1 - j] : coeffs_[j];
    return u;
}

exact::Poly BinaryForm::dehomogenize_exact(int chart) const {
    const auto& e = exact_coeffs();
    exact::Poly u(e.size());
    for (size_t j = 0; j < e.size(); ++j) u[j] = (chart == 0) ? e[e.size() - 1 - j] : e[j];
    return exact::trim(std::move(u));
}

// ---------------------------------------------------------------------------
// Operations

Complex evaluate(const BinaryForm& f, const ProjPoint& p) {
    const int d = f.degree();
    std::vector<Complex> pw0(static_cast<size_t>(d) + 1), pw1(static_cast<size_t>(d) + 1);
    pw0[0] = pw1[0] = Complex(1.0, 0.0);
    for (int i = 1; i <= d; ++i) {
        pw0[static_cast<size_t>(i)] = pw0[static_cast<size_t>(i - 1)] * p.p0();
        pw1[static_cast<size_t>(i)] = pw1[static_cast<size_t>(i - 1)] * p.p1();
    }
    Complex acc(0.0, 0.0);
    for (int i = 0; i <= d; ++i)
        acc += f.coeffs()[static_cast<size_t>(i)] * pw0[static_cast<size_t>(d - i)] * pw1[static_cast<size_t>(i)];
    return acc;
}

int vanishing_order(const BinaryForm& f, const ProjPoint& p, double threshold) {
    if (f.is_zero()) return order_infinity;

    if (f.is_exact() && p.is_exact()) {
        ProjPoint q = p.normalized();
        const auto& [q0, q1] = q.exact_coords();
        int chart = q1 == RationalComplex(1) ? 0 : 1;
        RationalComplex t0 = (chart == 0) ? q0 : q1;
        exact::Poly g = f.dehomogenize_exact(chart);
        // Orders above the chart degree live at the chart's missing point and
        // cannot occur at an affine t0 of this chart.
        return exact::root_multiplicity(g, t0);
    }

    ProjPoint q = p.normalized();
    int chart = (std::abs(q.p1()) >= std::abs(q.p0())) ? 0 : 1;
    Complex t0 = (chart == 0) ? q.p0() : q.p1();
    std::vector<Complex> g = f.dehomogenize(chart);
    // Taylor coefficients of g at t0 via repeated synthetic division.
    std::vector<Complex> taylor;
    std::vector<Complex> cur(g.rbegin(), g.rend());  // descending for Horner division
    for (size_t k = 0; k < g.size(); ++k) {
        Complex rem(0.0, 0.0);
        for (auto& c : cur) {
            Complex t = c + rem * t0;
            rem = t;
            c = t;
        }
        taylor.push_back(cur.back());
        cur.pop_back();
        if (cur.empty()) break;
    }
    double scale = 0.0;
    for (const auto& c : taylor) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return order_infinity;
    for (size_t j = 0; j < taylor.size(); ++j)
        if (std::abs(taylor[j]) > threshold * scale) return static_cast<int>(j);
    return f.degree();
}

std::vector<RootMult> roots_with_multiplicity(const BinaryForm& f, double tol, const RootOptions& opts) {
    if (f.is_zero()) throw ZeroFormError("roots_with_multiplicity");

    std::vector<RootMult> out;

    if (f.is_exact()) {
        int inf_order = f.order_at_infinity();
        if (inf_order > 0 && inf_order != order_infinity)
            out.push_back({ProjPoint::infinity(), inf_order});
        exact::Poly g = f.dehomogenize_exact(0);
        if (exact::degree(g) >= 1) {
            for (const auto& [factor, mult] : exact::squarefree_decomposition(g)) {
                std::vector<Complex> fd(factor.size());
                for (size_t i = 0; i < factor.size(); ++i) fd[i] = factor[i].to_complex();
                std::vector<Complex> roots = aberth(fd, {}, opts.max_iterations, opts.seed);
                for (Complex z : roots) out.push_back({ProjPoint::affine(z).normalized(), mult});
            }
        }
    } else {
        int inf_order = f.order_at_infinity();
        if (inf_order == order_infinity) throw ZeroFormError("roots_with_multiplicity");
        if (inf_order > 0) out.push_back({ProjPoint::infinity(), inf_order});
        std::vector<Complex> g = trim_univariate(f.dehomogenize(0), 1e-13);
        if (g.size() >= 2) {
            std::vector<Complex> warm = (opts.warm_start.size() == g.size() - 1) ? opts.warm_start
                                                                                 : std::vector<Complex>{};
            std::vector<Complex> z = aberth(g, warm, opts.max_iterations, opts.seed);
            for (const Cluster& c : cluster_roots(g, z, opts.cluster_radius)) {
                Complex center = c.size > 1 ? refine_cluster_center(g, c.center, c.size) : c.center;
                out.push_back({ProjPoint::affine(center).normalized(), c.size});
            }
        }
    }

    int total = 0;
    for (const auto& r : out) total += r.multiplicity;
    if (total != f.degree())
        throw NoConvergenceError("root multiplicities sum to " + std::to_string(total) +
                                 ", expected " + std::to_string(f.degree()));
    for (const auto& r : out) {
        if (relative_residual(f, r.point) > tol)
            throw NoConvergenceError("root residual above tolerance");
    }
    return out;
}

namespace {

template <typename T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

}  // namespace

BinaryForm form_product(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_exact() && g.is_exact())
        return BinaryForm(convolve(f.exact_coeffs(), g.exact_coeffs()));
    return BinaryForm(convolve(f.coeffs(), g.coeffs()));
}

BinaryForm form_sum(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree())
        throw Error("forms", "form_sum", "cannot add forms of degrees " + std::to_string(f.degree()) +
                                             " and " + std::to_string(g.degree()));
    if (f.is_exact() && g.is_exact()) {
        std::vector<RationalComplex> c(f.exact_coeffs());
        for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + g.exact_coeffs()[i];
        return BinaryForm(std::move(c));
    }
    std::vector<Complex> c(f.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
    return BinaryForm(std::move(c));
}

BinaryForm form_scale(const BinaryForm& f, Complex c) {
    std::vector<Complex> r(f.coeffs());
    for (auto& x : r) x *= c;
    return BinaryForm(std::move(r));
}

BinaryForm form_scale_exact(const BinaryForm& f, const RationalComplex& c) {
    std::vector<RationalComplex> r(f.exact_coeffs());
    for (auto& x : r) x = x * c;
    return BinaryForm(std::move(r));
}

BinaryForm form_pow(const BinaryForm& f, int n) {
    if (n < 0) throw Error("forms", "form_pow", "negative exponent");
    BinaryForm acc = f.is_exact() ? BinaryForm(std::vector<RationalComplex>{RationalComplex(1)})
                                  : BinaryForm(std::vector<Complex>{Complex(1.0, 0.0)});
    for (int i = 0; i < n; ++i) acc = form_product(acc, f);
    return acc;
}

BinaryForm derivative_x0(const BinaryForm& f) {
    const int d = f.degree();
    if (d == 0) return BinaryForm::zero(0);
    if (f.is_exact()) {
        std::vector<RationalComplex> r(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            r[static_cast<size_t>(i)] = f.exact_coeffs()[static_cast<size_t>(i)] * RationalComplex(d - i);
        return BinaryForm(std::move(r));
    }
    std::vector<Complex> r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = f.coeffs()[static_cast<size_t>(i)] * static_cast<double>(d - i);
    return BinaryForm(std::move(r));
}

BinaryForm derivative_x1(const BinaryForm& f) {
    const int d = f.degree();
    if (d == 0) return BinaryForm::zero(0);
    if (f.is_exact()) {
        std::vector<RationalComplex> r(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            r[static_cast<size_t>(i)] = f.exact_coeffs()[static_cast<size_t>(i + 1)] * RationalComplex(i + 1);
        return BinaryForm(std::move(r));
    }
    std::vector<Complex> r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = f.coeffs()[static_cast<size_t>(i + 1)] * static_cast<double>(i + 1);
    return BinaryForm(std::move(r));
}

std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs, const std::vector<Complex>& warm_start,
                                      int max_iterations, unsigned seed) {
    std::vector<Complex> g = trim_univariate(coeffs, 1e-14);
    if (g.size() < 2) return {};
    return aberth(g, warm_start, max_iterations, seed);
}

BinaryForm homogenize_exact(const exact::Poly& u, int x1_power) {
    int k = exact::degree(u);
    if (k < 0) throw Error("forms", "homogenize_exact", "zero polynomial has no homogenization");
    int d = k + x1_power;
    std::vector<RationalComplex> c(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= k; ++j) c[static_cast<size_t>(d - j)] = u[static_cast<size_t>(j)];
    return BinaryForm(std::move(c));
}

BinaryForm exact_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int ef = f.order_at_infinity(), eg = g.order_at_infinity();
    int m = std::min(ef, eg);
    exact::Poly u = exact::gcd(f.dehomogenize_exact(0), g.dehomogenize_exact(0));
    return homogenize_exact(u, m);
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw Error("forms", "exact_divide", "division by the zero form");
    int ef = f.order_at_infinity(), eg = g.order_at_infinity();
    if (ef < eg) throw Error("forms", "exact_divide", "quotient is not a form");
    exact::Poly q = exact::div_exact(f.dehomogenize_exact(0), g.dehomogenize_exact(0));
    return homogenize_exact(q, ef - eg);
}

std::vector<std::pair<BinaryForm, int>> exact_squarefree(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("exact_squarefree");
    std::vector<std::pair<BinaryForm, int>> out;
    int e = f.order_at_infinity();
    if (e > 0) out.emplace_back(BinaryForm(std::vector<RationalComplex>{RationalComplex(0), RationalComplex(1)}), e);
    exact::Poly g = f.dehomogenize_exact(0);
    if (exact::degree(g) >= 1)
        for (const auto& [factor, mult] : exact::squarefree_decomposition(g))
            out.emplace_back(homogenize_exact(factor, 0), mult);
    return out;
}

std::vector<BinaryForm> partials_of_order(const BinaryForm& f, int j) {
    std::vector<BinaryForm> out;
    for (int i = 0; i <= j; ++i) {
        BinaryForm p = f;
        for (int k = 0; k < j - i; ++k) p = derivative_x0(p);
        for (int k = 0; k < i; ++k) p = derivative_x1(p);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace k3
