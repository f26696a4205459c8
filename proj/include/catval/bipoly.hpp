#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "catval/rational.hpp"

namespace catval {

/// Sparse bivariate polynomial with exact rational coefficients, stored as a
/// map (i, j) -> coefficient of x^i y^j. Zero coefficients are never kept.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly constant(Rational c);
    static BiPoly monomial(Rational c, int i, int j);
    static BiPoly var_x() { return monomial(1, 1, 0); }
    static BiPoly var_y() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    BiPoly scaled(const Rational& c) const;
    BiPoly pow(unsigned e) const;

    /// The polynomial with x and y exchanged.
    BiPoly swapped() const;

    Rational eval(const Rational& x, const Rational& y) const;

    bool integer_coefficients() const;

    /// Canonical rendering: terms by descending total degree, then descending
    /// degree in the first variable; e.g. "x^2+xy+y^2+x+y".
    std::string str(std::string_view xvar = "x", std::string_view yvar = "y") const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void prune();

    std::map<Key, Rational> terms_;
};

}  // namespace catval
