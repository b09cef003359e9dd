#ifndef K3_FORMS_HPP
#define K3_FORMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "k3/exact_poly.hpp"
#include "k3/numeric.hpp"

namespace k3 {

// Point of P^1 with complex homogeneous coordinates. The pair is kept as
// given (evaluate() is covariant under rescaling); normalized() rescales so
// the larger-modulus coordinate is 1 and is what identity tests use.
class ProjPoint {
  public:
    ProjPoint(Complex p0, Complex p1);
    ProjPoint(RationalComplex p0, RationalComplex p1);

    static ProjPoint infinity() { return {Complex(1, 0), Complex(0, 0)}; }
    static ProjPoint affine(Complex t) { return {t, Complex(1, 0)}; }

    Complex p0() const { return p0_; }
    Complex p1() const { return p1_; }
    bool is_exact() const { return exact_.has_value(); }
    const std::pair<RationalComplex, RationalComplex>& exact_coords() const;

    ProjPoint normalized() const;
    bool at_infinity(double tol = 1e-12) const;

    // Proportionality test on normalized coordinates; exact when both exact.
    bool same_point(const ProjPoint& other, double tol = 1e-9) const;

  private:
    Complex p0_, p1_;
    std::optional<std::pair<RationalComplex, RationalComplex>> exact_;
};

// Homogeneous form of fixed degree in (x0, x1); coefficient of
// x0^(d-i) x1^i is stored at index i. Exact coefficients are carried
// alongside the double view when available.
class BinaryForm {
  public:
    explicit BinaryForm(std::vector<Complex> coeffs);
    explicit BinaryForm(std::vector<RationalComplex> coeffs);

    static BinaryForm zero(int degree);
    static BinaryForm monomial(int degree, int index, Complex value);
    // x0 - a*x1
    static BinaryForm linear(Complex a);
    static BinaryForm linear(const RationalComplex& a);

    int degree() const { return degree_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    bool is_exact() const { return exact_.has_value(); }
    const std::vector<RationalComplex>& exact_coeffs() const;

    bool is_zero() const;
    double max_coeff_norm() const;

    // Order of vanishing at [1:0] (count of leading zero coefficients).
    int order_at_infinity(double rel_tol = 1e-13) const;

    // f(t, 1) as an ascending univariate polynomial (chart 0) or f(1, t)
    // (chart 1). Trailing near-zero coefficients are kept; callers trim.
    std::vector<Complex> dehomogenize(int chart) const;
    exact::Poly dehomogenize_exact(int chart) const;

  private:
    int degree_ = 0;
    std::vector<Complex> coeffs_;
    std::optional<std::vector<RationalComplex>> exact_;
};

struct RootMult {
    ProjPoint point;
    int multiplicity;
};

Complex evaluate(const BinaryForm& f, const ProjPoint& p);

// mu_p(f); order_infinity for the zero form. Exact division when both the
// form and the point are exact, successive-derivative thresholding otherwise.
int vanishing_order(const BinaryForm& f, const ProjPoint& p, double threshold = 1e-8);

struct RootOptions {
    double cluster_radius = 1e-6;  // relative merge radius for near-coincident roots
    int max_iterations = 400;
    unsigned seed = 0;              // jitter for the starting configuration
    std::vector<Complex> warm_start;  // initial guesses (used when the count matches)
};

// All roots of f in P^1 with multiplicities summing to deg f. Exact forms are
// square-free-decomposed first so multiplicities are exact; inexact forms go
// through Aberth-Ehrlich iteration with inclusion-radius clustering.
std::vector<RootMult> roots_with_multiplicity(const BinaryForm& f, double tol = 1e-8,
                                              const RootOptions& opts = {});

BinaryForm form_product(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_sum(const BinaryForm& f, const BinaryForm& g);  // degrees must match
BinaryForm form_scale(const BinaryForm& f, Complex c);
BinaryForm form_scale_exact(const BinaryForm& f, const RationalComplex& c);
BinaryForm form_pow(const BinaryForm& f, int n);

BinaryForm derivative_x0(const BinaryForm& f);
BinaryForm derivative_x1(const BinaryForm& f);

// Roots of a monic-normalizable univariate polynomial (ascending
// coefficients), optionally warm-started; used by the path trackers.
std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs,
                                      const std::vector<Complex>& warm_start = {},
                                      int max_iterations = 400, unsigned seed = 0);

// Exact-form algebra (every argument must carry exact coefficients). Roots at
// [1:0] are tracked through the x1-power of the forms.
BinaryForm homogenize_exact(const exact::Poly& u, int x1_power);
BinaryForm exact_gcd(const BinaryForm& f, const BinaryForm& g);
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);
// Square-free factors with multiplicities covering all roots of f, the
// root at infinity included (as an x1 factor).
std::vector<std::pair<BinaryForm, int>> exact_squarefree(const BinaryForm& f);
// All partial derivatives of order j, i.e. d^j f / dx0^(j-i) dx1^i, i = 0..j.
std::vector<BinaryForm> partials_of_order(const BinaryForm& f, int j);

}  // namespace k3

#endif
