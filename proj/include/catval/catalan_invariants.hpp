#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "catval/bipoly.hpp"
#include "catval/ehrhart.hpp"
#include "catval/unipoly.hpp"

namespace catval {

/// The univariate valuative invariants with uniform-matroid closed forms.
enum class Family { ehrhart, kl, inverse_kl, z, whitney };

struct InvariantFamily {
    Family id;
    std::string name;      // CLI spelling: ehrhart, kl, invkl, z, whitney
    std::string variable;  // display variable
    std::function<UniPoly(long k, long n)> uniform;
};

const InvariantFamily& family(Family f);
const InvariantFamily* family_by_name(std::string_view name);

/// The partition-sum combinator: for any valuative invariant f given on
/// uniform matroids,
///   f(C_n^{a,b}) = sum over partitions lambda of n of
///                  (1/z_lambda) prod_i f(U_{lambda_i b, lambda_i (a+b)}).
///
/// The rational weights must cancel: for every family except Ehrhart the
/// result must have integer coefficients, and the Ehrhart result must have
/// constant term 1 and integer values at t = 0..degree+2. A violation throws
/// std::runtime_error("valuative identity violated").
UniPoly catalan_invariant(Family f, long a, long b, long n);

/// Same combinator for the bivariate Tutte polynomial.
BiPoly catalan_tutte(long a, long b, long n);

/// Lattice-relative volume of P(C_n^{a,b}):
///   A(n(a+b) - 1, nb) / (n (n(a+b) - 1)!),
/// which equals the leading coefficient of the Ehrhart polynomial.
Rational volume_catalan(long a, long b, long n);

/// Both sides of the paving-panhandle Ehrhart identity
///   i(SM(1,1,a,b), t) = ((a+1)/(a+b+1) t + 1) i(U_{b,a+b+1}, t),
/// the left side from lattice counting, the right from the closed form.
/// The identity is conjectural, so this only reports.
struct PanhandleCase {
    long a = 0, b = 0;
    UniPoly lhs, rhs;
    bool equal = false;
};

PanhandleCase panhandle_check(long a, long b);

}  // namespace catval
