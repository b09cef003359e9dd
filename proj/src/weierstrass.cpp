#include "k3/weierstrass.hpp"

#include <algorithm>
#include <cmath>

namespace k3 {

namespace {

Complex horner(const std::vector<Complex>& p, Complex z) {
    Complex v(0.0, 0.0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = v * z + p[static_cast<size_t>(i)];
    return v;
}

std::vector<Complex> derive(const std::vector<Complex>& p) {
    if (p.size() <= 1) return {Complex(0.0, 0.0)};
    std::vector<Complex> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

}  // namespace

BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B) {
    if (A.degree() != 8 || B.degree() != 12)
        throw Error("weierstrass", "discriminant",
                    "expected degrees (8, 12), got (" + std::to_string(A.degree()) + ", " +
                        std::to_string(B.degree()) + ")");
    BinaryForm a3 = form_pow(A, 3);
    BinaryForm b2 = form_pow(B, 2);
    if (a3.is_exact() && b2.is_exact()) {
        BinaryForm s = form_sum(form_scale_exact(a3, RationalComplex(4)), form_scale_exact(b2, RationalComplex(27)));
        BinaryForm d = form_scale_exact(s, RationalComplex(-16));
        if (d.is_zero()) throw ZeroDiscriminantError();
        return d;
    }
    BinaryForm s = form_sum(form_scale(a3, Complex(4.0, 0.0)), form_scale(b2, Complex(27.0, 0.0)));
    BinaryForm d = form_scale(s, Complex(-16.0, 0.0));
    if (d.is_zero()) throw ZeroDiscriminantError();
    return d;
}

WeierstrassData::WeierstrassData(BinaryForm A, BinaryForm B)
    : A_(std::move(A)), B_(std::move(B)), delta_(discriminant(A_, B_)) {}

MinimalityReport check_minimal(const WeierstrassData& w, double tol) {
    MinimalityReport report{true, {}};

    if (w.is_exact()) {
        // Violating points form the common zero locus of all third-order
        // partials of A and all fifth-order partials of B.
        auto locus = [](const BinaryForm& f, int order) {
            BinaryForm g = BinaryForm::zero(f.degree() - order);
            bool first = true;
            for (const BinaryForm& p : partials_of_order(f, order)) {
                g = first ? p : exact_gcd(g, p);
                first = false;
            }
            return g;
        };
        BinaryForm ga = w.A().is_zero() ? BinaryForm::zero(0) : locus(w.A(), 3);
        BinaryForm gb = w.B().is_zero() ? BinaryForm::zero(0) : locus(w.B(), 5);
        BinaryForm common = w.A().is_zero() ? gb : (w.B().is_zero() ? ga : exact_gcd(ga, gb));
        // A and B cannot both vanish identically (Delta would be zero).
        bool trivial = !common.is_zero() && common.order_at_infinity() == 0 &&
                       exact::degree(common.dehomogenize_exact(0)) == 0;
        if (!trivial && !common.is_zero()) {
            for (const auto& r : roots_with_multiplicity(common, tol)) report.violations.push_back(r.point);
        }
        report.minimal = report.violations.empty();
        return report;
    }

    for (const auto& r : roots_with_multiplicity(w.delta(), tol)) {
        int a = vanishing_order(w.A(), r.point, tol);
        int b = vanishing_order(w.B(), r.point, tol);
        if (a <= 3 || b <= 5) continue;
        report.violations.push_back(r.point);
    }
    report.minimal = report.violations.empty();
    return report;
}

bool smoothness_probe(const WeierstrassData& w, const ProjPoint& p, double tol) {
    if (w.is_exact() && p.is_exact()) {
        // Exact route: the singular point of the fibre and the probe value
        // are rational expressions in the chart data.
        ProjPoint q = p.normalized();
        const auto& [q0, q1] = q.exact_coords();
        int chart = q1 == RationalComplex(1) ? 0 : 1;
        RationalComplex u = (chart == 0) ? q0 : q1;
        exact::Poly ac = w.A().dehomogenize_exact(chart);
        exact::Poly bc = w.B().dehomogenize_exact(chart);
        exact::Poly dc = w.delta().dehomogenize_exact(chart);
        if (!exact::eval(dc, u).is_zero()) throw NotSingularFibreError();
        RationalComplex a = exact::eval(ac, u), b = exact::eval(bc, u);
        // Multiple root of x^3 + a x + b: x = -3b/(2a), or 0 for the cusp a = b = 0.
        RationalComplex xs = a.is_zero() ? RationalComplex(0)
                                         : (RationalComplex(-3) * b) / (RationalComplex(2) * a);
        RationalComplex probe =
            exact::eval(exact::derivative(ac), u) * xs + exact::eval(exact::derivative(bc), u);
        return !probe.is_zero();
    }

    ProjPoint q = p.normalized();
    double dres = std::abs(evaluate(w.delta(), q)) / std::max(w.delta().max_coeff_norm(), 1e-300);
    if (dres > 1e-6) throw NotSingularFibreError();

    int chart = (std::abs(q.p1()) >= std::abs(q.p0())) ? 0 : 1;
    Complex u = (chart == 0) ? q.p0() : q.p1();
    std::vector<Complex> ac = w.A().dehomogenize(chart);
    std::vector<Complex> bc = w.B().dehomogenize(chart);
    Complex a = horner(ac, u), b = horner(bc, u);

    // Fibre singularity in the chart z = 1: the multiple root of
    // x^3 + a x + b, found as the closest pair among its three roots.
    std::vector<Complex> cubic{b, a, Complex(0.0, 0.0), Complex(1.0, 0.0)};
    std::vector<Complex> roots = univariate_roots(cubic);
    Complex xs(0.0, 0.0);
    if (roots.size() == 3) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                double d = std::abs(roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)]);
                if (d < best) {
                    best = d;
                    xs = 0.5 * (roots[static_cast<size_t>(i)] + roots[static_cast<size_t>(j)]);
                }
            }
    }

    Complex da = horner(derive(ac), u), db = horner(derive(bc), u);
    Complex probe = da * xs + db;
    double scale = std::max(1.0, std::max(w.A().max_coeff_norm(), w.B().max_coeff_norm())) *
                   std::max(1.0, std::abs(xs));
    return std::abs(probe) > tol * scale;
}

Complex ChartEquation::a_at(Complex u) const { return horner(a_coeffs, u); }
Complex ChartEquation::b_at(Complex u) const { return horner(b_coeffs, u); }
Complex ChartEquation::a_deriv_at(Complex u) const { return horner(derive(a_coeffs), u); }
Complex ChartEquation::b_deriv_at(Complex u) const { return horner(derive(b_coeffs), u); }

Complex ChartEquation::value(Complex u, Complex x, Complex y, Complex z) const {
    return y * y * z - x * x * x - a_at(u) * x * z * z - b_at(u) * z * z * z;
}
Complex ChartEquation::du(Complex u, Complex x, Complex /*y*/, Complex z) const {
    return -a_deriv_at(u) * x * z * z - b_deriv_at(u) * z * z * z;
}
Complex ChartEquation::dx(Complex u, Complex x, Complex /*y*/, Complex z) const {
    return -3.0 * x * x - a_at(u) * z * z;
}
Complex ChartEquation::dy(Complex /*u*/, Complex /*x*/, Complex y, Complex z) const {
    return 2.0 * y * z;
}
Complex ChartEquation::dz(Complex u, Complex x, Complex y, Complex z) const {
    return y * y - 2.0 * a_at(u) * x * z - 3.0 * b_at(u) * z * z;
}

std::pair<ChartEquation, ChartEquation> chart_equations(const WeierstrassData& w) {
    ChartEquation c0{0, w.A().dehomogenize(0), w.B().dehomogenize(0)};
    ChartEquation c1{1, w.A().dehomogenize(1), w.B().dehomogenize(1)};
    return {c0, c1};
}

}  // namespace k3
