#pragma once

#include "catval/lattice.hpp"
#include "catval/matroid.hpp"
#include "catval/prefix_system.hpp"
#include "catval/unipoly.hpp"

namespace catval {

struct EhrhartResult {
    UniPoly poly;      // i(P, t), constant term 1
    long dim = 0;      // degree of the polynomial
    Rational leading;  // lattice-relative volume
};

/// Ehrhart polynomial by exact interpolation of lattice counts at
/// t = 0..degree_hint, verified against one extra node at degree_hint + 1.
/// Throws std::runtime_error("degree hint too small") when the extra node
/// disagrees.
EhrhartResult ehrhart_interpolate(const PrefixSystem& sys, long degree_hint);

/// Leading coefficient: the volume relative to the lattice of the spanning
/// hyperplane.
Rational volume_from_ehrhart(const EhrhartResult& e);

/// Polytope dimension of a matroid polytope: ground - #components.
long ehrhart_degree_hint(const MatroidExpr& m);

EhrhartResult ehrhart_of_matroid(const MatroidExpr& m);

}  // namespace catval
