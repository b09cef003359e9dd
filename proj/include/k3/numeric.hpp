#ifndef K3_NUMERIC_HPP
#define K3_NUMERIC_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3 {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Sentinel for the vanishing order of the zero form. Chosen so that
// order comparisons like "mu <= 3" work unchanged when the order is infinite.
inline constexpr int order_infinity = std::numeric_limits<int>::max();

// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RationalComplex(long v) : re(v), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    RationalComplex operator-() const { return {-re, -im}; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("RationalComplex: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    Complex to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

// Error hierarchy. Every failure carries the module and operation that
// raised it so the CLI can emit a machine-readable error object.
class Error : public std::runtime_error {
  public:
    Error(std::string module, std::string op, const std::string& what)
        : std::runtime_error(what), module_(std::move(module)), op_(std::move(op)) {}
    const std::string& module_name() const { return module_; }
    const std::string& op_name() const { return op_; }

  private:
    std::string module_;
    std::string op_;
};

struct ZeroFormError : Error {
    explicit ZeroFormError(const std::string& op)
        : Error("forms", op, "operation undefined for the zero form") {}
};
struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& msg) : Error("forms", "roots_with_multiplicity", msg) {}
};
struct ZeroDiscriminantError : Error {
    ZeroDiscriminantError() : Error("weierstrass", "discriminant", "discriminant vanishes identically") {}
};
struct NotSingularFibreError : Error {
    NotSingularFibreError() : Error("weierstrass", "smoothness_probe", "point is not a root of the discriminant") {}
};
struct NonMinimalError : Error {
    explicit NonMinimalError(const std::string& msg) : Error("kodaira", "classify_fibre", msg) {}
};
struct DuplicatePointsError : Error {
    explicit DuplicatePointsError(const std::string& op) : Error("families", op, "family points are not pairwise distinct") {}
};
struct ZeroKError : Error {
    ZeroKError() : Error("families", "nodal_family", "K must be nonzero") {}
};
struct InvalidGenusError : Error {
    explicit InvalidGenusError(const std::string& msg) : Error("curves", "severi_numbers", msg) {}
};
struct BadDegreeError : Error {
    explicit BadDegreeError(int l)
        : Error("curves", "quartic_severi_numbers", "no tabulated data for l=" + std::to_string(l)) {}
};
struct BranchAmbiguityError : Error {
    explicit BranchAmbiguityError(const std::string& msg) : Error("modulipath", "track_beta", msg) {}
};
struct DegenerateKError : Error {
    explicit DegenerateKError(const std::string& msg) : Error("modulipath", "track_beta", msg) {}
};
struct CollisionError : Error {
    explicit CollisionError(const std::string& op, const std::string& msg) : Error("modulipath", op, msg) {}
};

}  // namespace k3

#endif
