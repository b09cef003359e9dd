#include "k3/families.hpp"

#include <algorithm>
#include <cmath>

namespace k3 {

namespace {

double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
    double np = std::hypot(std::abs(p.p0()), std::abs(p.p1()));
    double nq = std::hypot(std::abs(q.p0()), std::abs(q.p1()));
    return std::abs(p.p0() * q.p1() - p.p1() * q.p0()) / (np * nq);
}

void require_distinct(const std::vector<Complex>& a, const char* op) {
    if (a.size() != 12) throw Error("families", op, "expected 12 points, got " + std::to_string(a.size()));
    double maxmod = 1e-30;
    for (Complex z : a) maxmod = std::max(maxmod, std::abs(z));
    if (min_pairwise_distance(a) <= kDistinctRelTol * maxmod) throw DuplicatePointsError(op);
}

}  // namespace

double min_pairwise_distance(const std::vector<Complex>& a) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) best = std::min(best, std::abs(a[i] - a[j]));
    return a.size() < 2 ? 0.0 : best;
}

WeierstrassData cuspidal_family(const std::vector<Complex>& a) {
    require_distinct(a, "cuspidal_family");
    BinaryForm b = BinaryForm::linear(a[0]);
    for (size_t i = 1; i < a.size(); ++i) b = form_product(b, BinaryForm::linear(a[i]));
    return {BinaryForm::zero(8), b};
}

WeierstrassData cuspidal_family(const std::vector<RationalComplex>& a) {
    if (a.size() != 12) throw Error("families", "cuspidal_family", "expected 12 points");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw DuplicatePointsError("cuspidal_family");
    BinaryForm b = BinaryForm::linear(a[0]);
    for (size_t i = 1; i < a.size(); ++i) b = form_product(b, BinaryForm::linear(a[i]));
    return {BinaryForm::zero(8), b};
}

Complex cbrt_K_squared(Complex K) {
    double r = std::abs(K);
    double theta = std::arg(K);
    if (theta < 0.0) theta += 2.0 * M_PI;
    return std::pow(r, 2.0 / 3.0) * std::polar(1.0, 2.0 * theta / 3.0);
}

WeierstrassData nodal_family(const std::vector<Complex>& a, Complex K) {
    if (K == Complex(0.0, 0.0)) throw ZeroKError();
    require_distinct(a, "nodal_family");
    const double delta = -std::cbrt(27.0 / 4.0);
    BinaryForm alpha = BinaryForm::linear(a[0]);
    for (size_t i = 1; i < a.size(); ++i) alpha = form_product(alpha, BinaryForm::linear(a[i]));
    BinaryForm A = BinaryForm::monomial(8, 8, cbrt_K_squared(K) * delta);
    BinaryForm B = form_sum(alpha, BinaryForm::monomial(12, 12, K));
    return {A, B};
}

FamilyValidation validate_family(const WeierstrassData& w, double tol) {
    FamilyValidation v;
    v.roots = roots_with_multiplicity(w.delta(), tol);

    bool all_simple = v.roots.size() == 24;
    bool all_double = w.A().is_zero() && v.roots.size() == 12;
    for (const auto& r : v.roots) {
        if (r.multiplicity != 1) all_simple = false;
        if (r.multiplicity != 2) all_double = false;
    }

    double minsep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.roots.size(); ++i)
        for (size_t j = i + 1; j < v.roots.size(); ++j)
            minsep = std::min(minsep, chordal_distance(v.roots[i].point, v.roots[j].point));
    if (v.roots.size() < 2) minsep = 0.0;

    if (all_simple) {
        v.pattern = FamilyPattern::NodalSmooth24;
        v.min_separation = minsep;
    } else if (all_double) {
        v.pattern = FamilyPattern::Cuspidal12;
        v.min_separation = minsep;
    } else {
        v.pattern = FamilyPattern::Degenerate;
        bool has_multiple = false;
        for (const auto& r : v.roots) has_multiple |= r.multiplicity > 1;
        v.min_separation = has_multiple ? 0.0 : minsep;
    }
    return v;
}

}  // namespace k3
