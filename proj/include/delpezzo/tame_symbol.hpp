#pragma once

// Tame symbols of rational functions on P^2 that are products of powers of
// linear forms. Restrictions to a line and their divisors are exact.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "delpezzo/cycle_algebra.hpp"

namespace delpezzo {

using Rational = mpq_class;
using PlanePoint = std::array<Rational, 3>;

// aX + bY + cZ.
struct LinearForm {
    std::array<Rational, 3> coeffs;

    static LinearForm parse(const std::string& text);  // "a,b,c", rationals allowed
    Rational operator()(const PlanePoint& p) const;
    bool is_zero() const;
    std::string to_string() const;  // "[a:b:c]" as written

    friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.coeffs == y.coeffs; }
};

bool proportional(const LinearForm& x, const LinearForm& y);

// Scales so that the first nonzero coordinate is 1; "[x:y:z]".
PlanePoint normalize(PlanePoint p);
std::string point_id(const PlanePoint& p);

// Product of L_k^{e_k}. Forms must be nonzero and pairwise non-proportional;
// a rational function on P^2 additionally needs sum e_k = 0.
class LinearFormFunction {
public:
    LinearFormFunction() = default;  // the constant 1
    explicit LinearFormFunction(std::vector<std::pair<LinearForm, Coeff>> factors);

    // "a,b,c^e;a,b,c^e" with exponent defaulting to 1; "" is the constant 1.
    static LinearFormFunction parse(const std::string& text);

    const std::vector<std::pair<LinearForm, Coeff>>& factors() const { return factors_; }
    Coeff degree() const;
    // Exponent of a form appearing verbatim; 0 otherwise.
    Coeff order_along(const LinearForm& line) const;

private:
    std::vector<std::pair<LinearForm, Coeff>> factors_;
};

// Parametrisation of a line Z: the coordinate with the largest |coefficient|
// (first on ties) is solved for, the other two are the parameters (u, v).
class LineParametrization {
public:
    explicit LineParametrization(const LinearForm& line);

    const LinearForm& line() const { return line_; }
    std::size_t solved_index() const { return solved_; }

    PlanePoint point(const Rational& u, const Rational& v) const;
    // L restricted to the line as alpha*u + beta*v.
    std::pair<Rational, Rational> restrict(const LinearForm& form) const;
    // The zero of L on the line, computed through the parametrisation.
    PlanePoint zero_of(const LinearForm& form) const;

private:
    LinearForm line_;
    std::size_t solved_ = 0;
    std::array<std::size_t, 2> params_{};
};

// The component of tau(f, g) along one support line Z:
// (-1)^{ord_f(Z) ord_g(Z)} f^{ord_g(Z)} / g^{ord_f(Z)} with the Z factors cancelled.
struct TameComponent {
    LinearForm line;
    int sign = 1;
    std::vector<std::pair<LinearForm, Coeff>> factors;

    bool is_one() const { return sign == 1 && factors.empty(); }
    // Exact value at a point of the line away from the factors.
    Rational evaluate(const PlanePoint& p) const;
    // Divisor on the line, keyed by point_id.
    std::map<std::string, Coeff> divisor() const;
};

struct TameSymbol {
    std::vector<TameComponent> components;  // one per support line, identically-1 components omitted
    FormalPrecycle precycle;                 // curve id "Z[a:b:c]" per component
};

std::string line_curve_id(const LinearForm& line);

// Throws DomainError if f or g is not of degree 0, GeometryError if two
// support forms are proportional without being equal or three support lines
// are concurrent.
TameSymbol tame_symbol(const LinearFormFunction& f, const LinearFormFunction& g);

// GeometryError naming the first offending triple or pair, if any.
void require_general_position(const std::vector<LinearForm>& lines);

}  // namespace delpezzo
