#include "catval/uniform_invariants.hpp"

#include <stdexcept>

#include "catval/counting.hpp"

namespace catval {

namespace {

// C(m(t), r) for a polynomial argument: m (m-1) ... (m-r+1) / r!.
UniPoly binomial_poly(const UniPoly& m, long r) {
    UniPoly prod = UniPoly::constant(1);
    for (long i = 0; i < r; ++i)
        prod = prod * (m - UniPoly::constant(Rational(i)));
    return prod.scaled(Rational(Int(1), factorial(r)));
}

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

BiPoly tutte_uniform(long k, long n) {
    require(n >= 1 && k >= 0 && k <= n, "formula range");
    if (k == n) return BiPoly::monomial(1, static_cast<int>(n), 0);
    if (k == 0) return BiPoly::monomial(1, 0, static_cast<int>(n));
    BiPoly t;
    for (long i = 1; i <= k; ++i)
        t += BiPoly::monomial(Rational(binomial(n - i - 1, n - k - 1)),
                              static_cast<int>(i), 0);
    for (long i = 1; i <= n - k; ++i)
        t += BiPoly::monomial(Rational(binomial(n - i - 1, k - 1)), 0,
                              static_cast<int>(i));
    return t;
}

UniPoly ehrhart_uniform(long k, long n) {
    require(n >= 1 && k >= 0 && k <= n, "formula range");
    if (k == 0) return UniPoly::constant(1);  // the origin at every dilation
    UniPoly total;
    int sign = 1;
    for (long j = 0; j < k; ++j, sign = -sign) {
        // Argument of the simplex count: (k-j)t + n - 1 - j.
        UniPoly arg({Rational(n - 1 - j), Rational(k - j)});
        total += binomial_poly(arg, n - 1).scaled(Rational(sign * binomial(n, j)));
    }
    return total;
}

UniPoly kl_uniform(long k, long n) {
    require(k >= 1 && k <= n, "KL undefined here");
    if (k == n) return UniPoly::constant(1);
    std::vector<Rational> coeffs(static_cast<size_t>((k - 1) / 2) + 1);
    for (long i = 0; i <= (k - 1) / 2; ++i) {
        Rational sum;
        for (long h = 0; h <= n - k - 1; ++h)
            sum += Rational(binomial(k - i + h, h + i + 1) * binomial(i - 1 + h, h));
        coeffs[static_cast<size_t>(i)] =
            Rational(binomial(n, i)) * sum / Rational(k - i);
    }
    UniPoly p{std::move(coeffs)};
    if (!p.integer_coefficients())
        throw std::logic_error("KL coefficient formula produced a non-integer");
    return p;
}

UniPoly inverse_kl_uniform(long k, long n) {
    require(k >= 1, "KL undefined here");
    require(n - k >= 1, "formula requires n-k >= 1");
    std::vector<Rational> coeffs(static_cast<size_t>((k - 1) / 2) + 1);
    for (long j = 0; j <= (k - 1) / 2; ++j) {
        Rational factor(Int((n - k) * (k - 2 * j)), Int((n - k + j) * (n - j)));
        coeffs[static_cast<size_t>(j)] = Rational(binomial(n, k)) * factor *
                                         Rational(binomial(k, j));
    }
    UniPoly q{std::move(coeffs)};
    if (!q.integer_coefficients())
        throw std::logic_error("inverse KL formula produced a non-integer");
    return q;
}

UniPoly zpoly_uniform(long k, long n) {
    require(k >= 1 && k < n, "formula range");
    std::vector<Rational> coeffs(static_cast<size_t>(k) + 1);
    for (long i = 0; i <= k; ++i) {
        Rational sum;
        for (long h = 0; h <= n - k - 1; ++h) {
            Rational term(Int(i * (h - n + k + 1) + n - k), Int((h + 1) * (n - k)));
            sum += term * Rational(binomial(i - 1 + h, h) * binomial(k - i + h, h));
        }
        Rational front = Rational(binomial(n, i + n - k) * binomial(n, i)) /
                         Rational(binomial(n, n - k));
        coeffs[static_cast<size_t>(i)] = front * sum;
    }
    UniPoly z{std::move(coeffs)};
    if (!z.integer_coefficients())
        throw std::logic_error("Z coefficient formula produced a non-integer");
    return z;
}

UniPoly zpoly_from_kl(long k, long n) {
    require(k >= 1 && k < n, "formula range");
    UniPoly z = UniPoly::monomial(1, static_cast<int>(k));
    for (long i = 1; i <= k; ++i) {
        UniPoly term = UniPoly::monomial(Rational(binomial(n, n - k + i)),
                                         static_cast<int>(k - i)) *
                       kl_uniform(i, n - k + i);
        z += term;
    }
    return z;
}

UniPoly whitney_uniform(long k, long n) {
    require(k >= 1 && k <= n, "formula range");
    std::vector<Rational> coeffs(static_cast<size_t>(k) + 1);
    for (long i = 0; i <= k - 1; ++i) coeffs[static_cast<size_t>(i)] = Rational(binomial(n, i));
    coeffs[static_cast<size_t>(k)] = 1;
    return UniPoly{std::move(coeffs)};
}

}  // namespace catval
