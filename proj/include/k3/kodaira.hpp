#ifndef K3_KODAIRA_HPP
#define K3_KODAIRA_HPP

#include <string>
#include <vector>

#include "k3/weierstrass.hpp"

namespace k3 {

enum class KodairaTag { I0, In, II, III, IV, InStar, IVStar, IIIStar, IIStar };

struct KodairaType {
    KodairaTag tag;
    int n = 0;  // valid for In and InStar only
    std::string name() const;
    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.tag == b.tag && (a.tag != KodairaTag::In && a.tag != KodairaTag::InStar ? true : a.n == b.n);
    }
};

enum class RdpSeries { None, A, D, E };

struct RdpType {
    RdpSeries series = RdpSeries::None;
    int index = 0;
    std::string name() const;
    bool is_none() const { return series == RdpSeries::None; }
    friend bool operator==(const RdpType& a, const RdpType& b) {
        return a.series == b.series && (a.series == RdpSeries::None || a.index == b.index);
    }
};

struct ClassifiedType {
    KodairaType type;
    int euler;
    RdpType rdp;
};

// Order-based decision table for the short Weierstrass form in
// characteristic zero; a = mu(A), b = mu(B), d = mu(Delta), with
// order_infinity allowed for a and b. Throws NonMinimalError when
// a >= 4 and b >= 6.
ClassifiedType classify_orders(int a, int b, int d);

struct FibreRecord {
    ProjPoint position;
    int ord_a;
    int ord_b;
    int ord_delta;
    KodairaType type;
    int euler;
    RdpType rdp;
};

struct FibreReport {
    std::vector<FibreRecord> fibres;
    int total_euler = 0;
    bool surface_smooth = false;
    bool minimal = false;
};

FibreRecord classify_fibre(const WeierstrassData& w, const ProjPoint& p, double tol = 1e-8);

// Classifies every root of Delta. Exact data goes through square-free
// decomposition and gcd splitting, so the reported orders are exact even at
// multiple roots; inexact data uses root clustering plus order thresholding.
FibreReport fibre_report(const WeierstrassData& w, double tol = 1e-8);

}  // namespace k3

#endif
