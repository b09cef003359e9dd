#include "k3/kodaira.hpp"

#include <algorithm>

namespace k3 {

std::string KodairaType::name() const {
    switch (tag) {
        case KodairaTag::I0: return "I0";
        case KodairaTag::In: return "I" + std::to_string(n);
        case KodairaTag::II: return "II";
        case KodairaTag::III: return "III";
        case KodairaTag::IV: return "IV";
        case KodairaTag::InStar: return "I" + std::to_string(n) + "*";
        case KodairaTag::IVStar: return "IV*";
        case KodairaTag::IIIStar: return "III*";
        case KodairaTag::IIStar: return "II*";
    }
    return "?";
}

std::string RdpType::name() const {
    switch (series) {
        case RdpSeries::None: return "none";
        case RdpSeries::A: return "A" + std::to_string(index);
        case RdpSeries::D: return "D" + std::to_string(index);
        case RdpSeries::E: return "E" + std::to_string(index);
    }
    return "?";
}

ClassifiedType classify_orders(int a, int b, int d) {
    if (d == 0) return {{KodairaTag::I0}, 0, {}};
    if (a == 0) {
        RdpType rdp = d >= 2 ? RdpType{RdpSeries::A, d - 1} : RdpType{};
        return {{KodairaTag::In, d}, d, rdp};
    }
    if (b == 1) return {{KodairaTag::II}, 2, {}};
    if (a == 1 && b >= 2) return {{KodairaTag::III}, 3, {RdpSeries::A, 1}};
    if (a >= 2 && b == 2) return {{KodairaTag::IV}, 4, {RdpSeries::A, 2}};
    if (a >= 4 && b >= 6) throw NonMinimalError("orders mu(A) >= 4 and mu(B) >= 6: data not minimal");
    if (a >= 2 && b >= 3 && d == 6) return {{KodairaTag::InStar, 0}, 6, {RdpSeries::D, 4}};
    if (a == 2 && b == 3 && d > 6) {
        int n = d - 6;
        // The minimal resolution has dual graph D_{n+4}.
        return {{KodairaTag::InStar, n}, d, {RdpSeries::D, n + 4}};
    }
    if (a >= 3 && b == 4) return {{KodairaTag::IVStar}, 8, {RdpSeries::E, 6}};
    if (a == 3 && b >= 5) return {{KodairaTag::IIIStar}, 9, {RdpSeries::E, 7}};
    if (a >= 4 && b == 5) return {{KodairaTag::IIStar}, 10, {RdpSeries::E, 8}};
    throw Error("kodaira", "classify_orders",
                "order triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(d) +
                    ") matches no row of the decision table");
}

FibreRecord classify_fibre(const WeierstrassData& w, const ProjPoint& p, double tol) {
    int a = vanishing_order(w.A(), p, tol);
    int b = vanishing_order(w.B(), p, tol);
    int d = vanishing_order(w.delta(), p, tol);
    ClassifiedType c = classify_orders(a, b, d);
    return {p.normalized(), a, b, d, c.type, c.euler, c.rdp};
}

namespace {

// Refine a square-free factor of Delta into pieces on which the vanishing
// order of f is constant; piece orders start at `base`. Pieces of degree
// zero are dropped.
struct OrderPiece {
    BinaryForm factor;
    int order;
};

bool is_constant_form(const BinaryForm& f) {
    return !f.is_zero() && f.order_at_infinity() == 0 && exact::degree(f.dehomogenize_exact(0)) == 0;
}

std::vector<OrderPiece> split_by_orders(const BinaryForm& piece, const BinaryForm& f) {
    if (f.is_zero()) return {{piece, order_infinity}};
    std::vector<OrderPiece> done;
    BinaryForm rest = piece;
    int order = 0;
    while (true) {
        if (is_constant_form(rest)) break;
        // Locus of points with mu(f) >= order + 1.
        BinaryForm locus = BinaryForm::zero(0);
        bool first = true;
        for (const BinaryForm& q : partials_of_order(f, order)) {
            locus = first ? q : exact_gcd(locus, q);
            first = false;
        }
        if (locus.is_zero()) {
            // All partials of this order vanish identically: cannot happen
            // for nonzero f in characteristic zero below its degree.
            done.push_back({rest, order_infinity});
            return done;
        }
        BinaryForm high = exact_gcd(rest, locus);
        if (is_constant_form(high)) {
            done.push_back({rest, order});
            return done;
        }
        BinaryForm low = exact_divide(rest, high);
        if (!is_constant_form(low)) done.push_back({low, order});
        rest = high;
        ++order;
        if (order > f.degree()) {
            done.push_back({rest, order});
            return done;
        }
    }
    return done;
}

}  // namespace

FibreReport fibre_report(const WeierstrassData& w, double tol) {
    FibreReport report;

    if (w.is_exact()) {
        for (const auto& [factor, dmult] : exact_squarefree(w.delta())) {
            for (const auto& [piece_a, a] : split_by_orders(factor, w.A())) {
                for (const auto& [piece, b] : split_by_orders(piece_a, w.B())) {
                    ClassifiedType c = classify_orders(a, b, dmult);
                    for (const auto& r : roots_with_multiplicity(piece, tol))
                        report.fibres.push_back({r.point, a, b, dmult, c.type, c.euler, c.rdp});
                }
            }
        }
    } else {
        for (const auto& r : roots_with_multiplicity(w.delta(), tol)) {
            int a = vanishing_order(w.A(), r.point, tol);
            int b = vanishing_order(w.B(), r.point, tol);
            ClassifiedType c = classify_orders(a, b, r.multiplicity);
            report.fibres.push_back({r.point, a, b, r.multiplicity, c.type, c.euler, c.rdp});
        }
    }

    report.total_euler = 0;
    report.surface_smooth = true;
    for (const auto& f : report.fibres) {
        report.total_euler += f.euler;
        if (!f.rdp.is_none()) report.surface_smooth = false;
    }
    report.minimal = check_minimal(w, tol).minimal;
    return report;
}

}  // namespace k3
