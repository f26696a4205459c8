#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catval/rational.hpp"

namespace catval {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient vector and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, int power);
    /// Ascending integer coefficients, convenient for literals in tests.
    static UniPoly from_ints(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    UniPoly scaled(const Rational& c) const;
    UniPoly pow(unsigned e) const;

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const;

    bool integer_coefficients() const;

    /// Canonical rendering: descending powers, explicit '+', unit
    /// coefficients elided except in the constant term. Non-integer
    /// coefficients are parenthesized, e.g. "(1/3)t^3+(3/2)t^2".
    std::string str(std::string_view var = "t") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Unique interpolating polynomial of degree < nodes.size() through the given
/// (abscissa, value) pairs, by exact Newton divided differences.
/// Throws std::invalid_argument("degenerate interpolation") on repeated
/// abscissae.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& nodes);

}  // namespace catval
