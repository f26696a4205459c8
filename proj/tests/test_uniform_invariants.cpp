#include <doctest.h>

#include "catval/ehrhart.hpp"
#include "catval/lattice.hpp"
#include "catval/oracles.hpp"
#include "catval/uniform_invariants.hpp"

using namespace catval;

namespace {

Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }

}  // namespace

TEST_CASE("tutte polynomial of uniform matroids") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK(tutte_uniform(1, 2) == (x + y));
    CHECK(tutte_uniform(2, 4) == (x * x + x.scaled(2) + y.scaled(2) + y * y));
    CHECK(tutte_uniform(2, 4).eval(1, 1) == Rational(6));
    CHECK(tutte_uniform(4, 4) == BiPoly::monomial(1, 4, 0));
    CHECK(tutte_uniform(0, 3) == BiPoly::monomial(1, 0, 3));
    CHECK_THROWS_WITH(tutte_uniform(5, 4), "formula range");

    // Duality swaps the variables.
    for (long n = 2; n <= 9; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(tutte_uniform(k, n).swapped() == tutte_uniform(n - k, n));

    // Against the corank-nullity sum.
    for (long n = 1; n <= 7; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(tutte_uniform(k, n) == tutte_bruteforce(MatroidExpr::uniform(k, n)));
}

TEST_CASE("ehrhart closed form for hypersimplices") {
    CHECK(ehrhart_uniform(1, 2) == UniPoly::from_ints({1, 1}));
    CHECK(ehrhart_uniform(2, 4) ==
          UniPoly::from_ints({1, 1}) * UniPoly({1, rat(4, 3), rat(2, 3)}));
    // C(t+2, 2) for the dilated simplex.
    CHECK(ehrhart_uniform(1, 3) == UniPoly({1, rat(3, 2), rat(1, 2)}));
    CHECK(ehrhart_uniform(3, 3) == UniPoly::constant(1));

    // Against the lattice-count oracle.
    for (long n = 1; n <= 7; ++n)
        for (long k = 1; k <= n; ++k) {
            UniPoly closed = ehrhart_uniform(k, n);
            for (long t = 0; t <= n; ++t)
                CHECK(closed(Rational(t)) ==
                      Rational(lattice_points(uniform_system(k, n), t)));
        }
}

TEST_CASE("kl polynomials of uniform matroids") {
    CHECK(kl_uniform(2, 4) == UniPoly::constant(1));
    CHECK(kl_uniform(3, 6) == UniPoly::from_ints({1, 9}));
    CHECK(kl_uniform(1, 5) == UniPoly::constant(1));
    CHECK(kl_uniform(4, 4) == UniPoly::constant(1));  // free matroid convention
    CHECK_THROWS_WITH(kl_uniform(0, 4), "KL undefined here");

    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            UniPoly p = kl_uniform(k, n);
            CHECK(p.coeff(0) == Rational(1));
            CHECK(p.degree() <= (k - 1) / 2);
            CHECK(p.integer_coefficients());
        }
}

TEST_CASE("inverse kl polynomials of uniform matroids") {
    CHECK(inverse_kl_uniform(1, 2) == UniPoly::constant(1));
    CHECK(inverse_kl_uniform(2, 4) == UniPoly::constant(3));
    CHECK(inverse_kl_uniform(3, 6) == UniPoly::from_ints({10, 9}));
    CHECK_THROWS_WITH(inverse_kl_uniform(4, 4), "formula requires n-k >= 1");

    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            UniPoly q = inverse_kl_uniform(k, n);
            CHECK(q.degree() <= (k - 1) / 2);
            CHECK(q.integer_coefficients());
        }
}

TEST_CASE("z polynomials: coefficient formula equals the kl route") {
    CHECK(zpoly_from_kl(1, 2) == UniPoly::from_ints({1, 1}));
    CHECK(zpoly_from_kl(2, 4) == UniPoly::from_ints({1, 4, 1}));
    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            UniPoly z = zpoly_uniform(k, n);
            CHECK(z == zpoly_from_kl(k, n));
            CHECK(z.degree() == k);  // monic of degree k
            CHECK(z.leading() == Rational(1));
        }
}

TEST_CASE("z polynomials of U_{k,k+1} are Narayana polynomials") {
    CHECK(narayana_poly(2) == UniPoly::from_ints({1, 1}));
    CHECK(narayana_poly(3) == UniPoly::from_ints({1, 3, 1}));
    for (long k = 1; k <= 6; ++k)
        CHECK(zpoly_uniform(k, k + 1) == narayana_poly(k + 1));
}

TEST_CASE("whitney polynomials of uniform matroids") {
    CHECK(whitney_uniform(2, 4) == UniPoly::from_ints({1, 4, 1}));
    CHECK(whitney_uniform(1, 2) == UniPoly::from_ints({1, 1}));
    CHECK(whitney_uniform(3, 6) == UniPoly::from_ints({1, 6, 15, 1}));
    // Boolean matroid: every subset is a flat.
    CHECK(whitney_uniform(3, 3) == UniPoly::from_ints({1, 3, 3, 1}));
    // Against flat enumeration; always monic of degree k.
    for (long n = 1; n <= 7; ++n)
        for (long k = 1; k <= n; ++k) {
            UniPoly w = whitney_uniform(k, n);
            CHECK(w == whitney_bruteforce(MatroidExpr::uniform(k, n)));
            CHECK(w.degree() == k);
            CHECK(w.leading() == Rational(1));
        }
}
