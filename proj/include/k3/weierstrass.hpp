#ifndef K3_WEIERSTRASS_HPP
#define K3_WEIERSTRASS_HPP

#include <utility>
#include <vector>

#include "k3/forms.hpp"

namespace k3 {

// Weierstrass data (A, B) of degrees (8, 12) for y^2 z = x^3 + A x z^2 + B z^3
// over P^1; the K3 case. Construction rejects identically vanishing
// discriminants; minimality is checked separately (check_minimal).
class WeierstrassData {
  public:
    WeierstrassData(BinaryForm A, BinaryForm B);

    const BinaryForm& A() const { return A_; }
    const BinaryForm& B() const { return B_; }
    const BinaryForm& delta() const { return delta_; }
    bool is_exact() const { return A_.is_exact() && B_.is_exact(); }

  private:
    BinaryForm A_;
    BinaryForm B_;
    BinaryForm delta_;
};

// Delta(A,B) = -16 (4 A^3 + 27 B^2), degree 24.
BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B);
inline const BinaryForm& discriminant(const WeierstrassData& w) { return w.delta(); }

struct MinimalityReport {
    bool minimal;
    std::vector<ProjPoint> violations;  // points with mu(A) >= 4 and mu(B) >= 6
};

MinimalityReport check_minimal(const WeierstrassData& w, double tol = 1e-8);

// True iff the total space is smooth at the singular point of the fibre over
// p: locates the fibre singularity in the chart z = 1 and probes the
// u-derivative A'(p) x + B'(p) there. p must be a root of Delta.
bool smoothness_probe(const WeierstrassData& w, const ProjPoint& p, double tol = 1e-5);

// Affine chart equation f = y^2 z - x^3 - A_c(u) x z^2 - B_c(u) z^3 together
// with its four partial derivatives; chart 1 carries the dehomogenizations
// A_1(u) = u^8 A_0(1/u), B_1(u) = u^12 B_0(1/u).
struct ChartEquation {
    int chart;
    std::vector<Complex> a_coeffs;  // ascending in u
    std::vector<Complex> b_coeffs;

    Complex a_at(Complex u) const;
    Complex b_at(Complex u) const;
    Complex a_deriv_at(Complex u) const;
    Complex b_deriv_at(Complex u) const;

    Complex value(Complex u, Complex x, Complex y, Complex z) const;
    Complex du(Complex u, Complex x, Complex y, Complex z) const;
    Complex dx(Complex u, Complex x, Complex y, Complex z) const;
    Complex dy(Complex u, Complex x, Complex y, Complex z) const;
    Complex dz(Complex u, Complex x, Complex y, Complex z) const;
};

std::pair<ChartEquation, ChartEquation> chart_equations(const WeierstrassData& w);

}  // namespace k3

#endif
