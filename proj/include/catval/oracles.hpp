#pragma once

#include "catval/bipoly.hpp"
#include "catval/matroid.hpp"
#include "catval/unipoly.hpp"

namespace catval {

/// Tutte polynomial from first principles: the corank-nullity sum
///   sum over subsets A of (x-1)^{rk(E)-rk(A)} (y-1)^{|A|-rk(A)},
/// using only the structural rank function. Throws
/// std::runtime_error("enumeration too large") above the ground cap.
BiPoly tutte_bruteforce(const MatroidExpr& m, long ground_cap = 16);

/// Whitney polynomial from flat enumeration: sum_i W_i x^i.
UniPoly whitney_bruteforce(const MatroidExpr& m, long ground_cap = kFlatsGroundCap);

/// Narayana polynomial sum_paths t^{peaks-1} over ballot sequences (Dyck
/// paths) of the given semilength, by direct enumeration. Independent anchor
/// for the Z-polynomials of U_{k,k+1}.
UniPoly narayana_poly(long semilength);

}  // namespace catval
