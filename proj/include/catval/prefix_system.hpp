#pragma once

#include <vector>

#include "catval/matroid.hpp"
#include "catval/rational.hpp"

namespace catval {

/// Lower bound on the sum of a circular interval of coordinates: the len
/// coordinates starting at start (1-based), wrapping past dim.
struct IntervalBound {
    long start = 1;
    long len = 0;
    long bound = 0;

    bool wraps(long dim) const { return start + len - 1 > dim; }
    bool covers(long dim, long position) const {
        long rel = (position - start + dim) % dim;
        return rel < len;
    }
    friend bool operator==(const IntervalBound&, const IntervalBound&) = default;
};

/// Exact halfspace description of the polytopes in play:
///   0 <= x_i <= t,  sum x_i = target * t,  and  sum_{i in I} x_i >= bound * t
/// for each circular interval I, at dilation t (t = 1 for membership).
struct PrefixSystem {
    long dim = 0;
    long target = 0;
    std::vector<IntervalBound> bounds;

    /// True when every constraint is a plain prefix [1..len]; these systems
    /// admit the fast counting kernel.
    bool all_prefix() const;

    friend bool operator==(const PrefixSystem&, const PrefixSystem&) = default;
};

/// Minimal inequality system of a Schubert matroid polytope: prefix sums
/// x_1 + ... + x_{s_j} >= j for the elements s_j of S, with the box; bounds
/// already implied by the box are dropped.
PrefixSystem system_of_schubert(const SchubertSpec& spec);

/// Hypersimplex: box and coordinate sum only.
PrefixSystem uniform_system(long k, long n);

/// System of a uniform / Schubert / direct-sum matroid expression. Direct
/// sums get each block's constraints shifted into place plus one block-sum
/// bound per block, which pins every block total. Duals are not supported.
PrefixSystem system_of_matroid(const MatroidExpr& m);

/// Rotated (a,b)-Catalan system: circular intervals of length (a+b)j
/// starting after m blocks, with bound jb, for j = 1..n-1. m = 0 recovers the
/// Schubert description of the Catalan matroid.
PrefixSystem rotated_catalan_system(long a, long b, long n, long m);

/// Intersection of the rotated systems indexed by the nonempty subset A of
/// [n]: the union of their constraint lists.
PrefixSystem q_system(const std::vector<long>& A, long a, long b, long n);

/// Exact membership of a rational point in the dilated system.
bool contains(const PrefixSystem& sys, const std::vector<Rational>& x,
              const Rational& dilation = Rational(1));

}  // namespace catval
