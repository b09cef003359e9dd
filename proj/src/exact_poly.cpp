#include "k3/exact_poly.hpp"

#include <stdexcept>

namespace k3::exact {

Poly trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

bool is_zero(const Poly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] - b[i];
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, const RationalComplex& c) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return trim(std::move(r));
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * RationalComplex(static_cast<long>(i));
    return trim(std::move(r));
}

Poly monic(const Poly& a) {
    int d = degree(a);
    if (d < 0) return {};
    Poly r = trim(a);
    RationalComplex lead = r[static_cast<size_t>(d)];
    for (auto& c : r) c = c / lead;
    return r;
}

RationalComplex eval(const Poly& a, const RationalComplex& t) {
    RationalComplex acc;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * t + a[static_cast<size_t>(i)];
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("exact::divmod: division by zero polynomial");
    Poly rem = trim(a);
    int da = degree(rem);
    if (da < db) return {Poly{}, rem};
    Poly quot(static_cast<size_t>(da - db + 1));
    const RationalComplex lead = b[static_cast<size_t>(db)];
    for (int k = da - db; k >= 0; --k) {
        int top = k + db;
        if (top >= static_cast<int>(rem.size())) continue;
        RationalComplex c = rem[static_cast<size_t>(top)];
        if (c.is_zero()) continue;
        RationalComplex q = c / lead;
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(k + j);
            rem[idx] = rem[idx] - q * b[static_cast<size_t>(j)];
        }
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!is_zero(r)) throw std::domain_error("exact::div_exact: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = monic(a), y = monic(b);
    while (!is_zero(y)) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return x;
}

int root_multiplicity(const Poly& p, const RationalComplex& t0) {
    if (is_zero(p)) return order_infinity;
    Poly cur = trim(p);
    Poly lin{-t0, RationalComplex(1)};
    int mult = 0;
    while (eval(cur, t0).is_zero()) {
        cur = div_exact(cur, lin);
        ++mult;
    }
    return mult;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic(p);
    if (degree(f) <= 0) return out;
    Poly fp = derivative(f);
    Poly a = gcd(f, fp);
    Poly b = div_exact(f, a);          // product of distinct roots
    Poly c = div_exact(fp, a);
    Poly d = sub(c, derivative(b));
    int k = 1;
    while (degree(b) > 0) {
        Poly g = gcd(b, d);
        if (degree(g) > 0) out.emplace_back(monic(g), k);
        b = div_exact(b, g.empty() ? Poly{RationalComplex(1)} : g);
        Poly cq = div_exact(d, g.empty() ? Poly{RationalComplex(1)} : g);
        d = sub(cq, derivative(b));
        ++k;
    }
    return out;
}

}  // namespace k3::exact
