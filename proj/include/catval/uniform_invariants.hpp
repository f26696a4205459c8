#pragma once

#include "catval/bipoly.hpp"
#include "catval/unipoly.hpp"

namespace catval {

/// Tutte polynomial of U_{k,n}:
///   sum_{i=1}^{k} C(n-i-1, n-k-1) x^i + sum_{i=1}^{n-k} C(n-i-1, k-1) y^i
/// for 1 <= k <= n-1; x^n for k = n and y^n for k = 0 (corank-nullity
/// definition). Throws std::invalid_argument("formula range") otherwise.
BiPoly tutte_uniform(long k, long n);

/// Ehrhart polynomial of the hypersimplex P(U_{k,n}): the alternating sum
///   sum_{j=0}^{k-1} (-1)^j C(n,j) C(kt - j(t+1) + n - 1, n - 1)
/// expanded exactly as a polynomial in t, degree n - 1, constant term 1.
UniPoly ehrhart_uniform(long k, long n);

/// Kazhdan-Lusztig polynomial of U_{k,n}: coefficients
///   c_i = 1/(k-i) C(n,i) sum_{h=0}^{n-k-1} C(k-i+h, h+i+1) C(i-1+h, h)
/// for 0 <= i <= floor((k-1)/2). Returns the constant 1 for k = n (free
/// matroid convention). Throws std::invalid_argument("KL undefined here")
/// when k < 1 or k > n.
UniPoly kl_uniform(long k, long n);

/// Inverse Kazhdan-Lusztig polynomial of U_{k,n}:
///   C(n,k) sum_{j=0}^{floor((k-1)/2)} (n-k)(k-2j) / ((n-k+j)(n-j)) C(k,j) t^j.
/// Throws std::invalid_argument("formula requires n-k >= 1") when k >= n.
UniPoly inverse_kl_uniform(long k, long n);

/// Z-polynomial of U_{k,n} from the closed coefficient formula, 1 <= k < n.
UniPoly zpoly_uniform(long k, long n);

/// Z-polynomial of U_{k,n} assembled from KL polynomials:
///   t^k + sum_{i=1}^{k} C(n, n-k+i) t^{k-i} P_{U_{i, n-k+i}}(t).
UniPoly zpoly_from_kl(long k, long n);

/// Whitney rank generating polynomial of U_{k,n}:
///   sum_{i=0}^{k-1} C(n,i) x^i + x^k, for 1 <= k <= n.
UniPoly whitney_uniform(long k, long n);

}  // namespace catval
