#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catval/rational.hpp"

namespace catval {

/// Subset of the ground set [n], kept sorted and duplicate-free.
using GroundSubset = std::vector<long>;

/// Schubert matroid described by the run-length encoding of the indicator
/// vector of S: runs (r1, r2, ..., r2m) mean r1 zeros, r2 ones, r3 zeros, ...
/// All runs are positive, so 1 is never in S and the ground size is in S.
struct SchubertSpec {
    std::vector<long> runs;
    GroundSubset ones;  // S, strictly increasing
    long ground = 0;    // sum of runs
    long rank = 0;      // |S|
};

/// Decode a run-length sequence; throws std::invalid_argument("invalid run
/// encoding") unless the length is even, positive, and every run is >= 1.
SchubertSpec schubert_from_r(const std::vector<long>& runs);

/// The (a,b)-Catalan matroid: runs (a, b, a, b, ..., a, b) of length 2n,
/// ground n(a+b), rank nb.
SchubertSpec catalan_matroid(long a, long b, long n);

/// Componentwise dominance of sorted subsets: |T| == |S| and the i-th
/// smallest element of T is <= that of S.
bool dominates(const GroundSubset& T, const GroundSubset& S);

/// Rank of the word's underlying set in the Schubert matroid, by the greedy
/// box-filling rule: scan the word left to right and place each element into
/// the lowest-index unused element of S that is >= it. The result does not
/// depend on the order of the word.
long filling_rank(const SchubertSpec& spec, const std::vector<long>& word);

inline constexpr long kBasesGroundCap = 20;
inline constexpr long kFlatsGroundCap = 14;

/// Structural matroid: uniform, Schubert, direct sum of blocks laid out
/// consecutively on the ground set, or a formal dual. Immutable value type.
class MatroidExpr {
public:
    static MatroidExpr uniform(long k, long n);
    static MatroidExpr schubert(SchubertSpec spec);
    static MatroidExpr direct_sum(std::vector<MatroidExpr> blocks);

    long ground() const;
    long rank() const;
    /// Number of connected components (polytope dimension = ground - this).
    long components() const;

    /// Rank of a subset, computed structurally: filling algorithm for
    /// Schubert parts, min(|T|, k) for uniform, blockwise sums for direct
    /// sums, and |T| + rk(E \ T) - rk(E) for duals.
    long rank_of(const GroundSubset& subset) const;

    /// All bases in lexicographic order. Throws
    /// std::runtime_error("enumeration too large") above the ground cap.
    std::vector<GroundSubset> bases(long ground_cap = kBasesGroundCap) const;

    /// Smallest flat containing the subset: all x with rk(A + x) = rk(A).
    GroundSubset closure(const GroundSubset& subset) const;

    /// Whitney numbers of the second kind W_0..W_rank, by closing every
    /// subset and deduplicating. Same cap behaviour as bases().
    std::vector<long> flats_by_rank(long ground_cap = kFlatsGroundCap) const;

    /// Dual matroid. Uniform duals collapse to uniform(n-k, n), direct sums
    /// dualize blockwise, double duals unwrap; Schubert duals stay symbolic
    /// with the complement rank formula.
    MatroidExpr dual() const;

    std::string str() const;

    // Structure accessors (used by the polytope layer).
    bool is_uniform() const;
    bool is_schubert() const;
    bool is_direct_sum() const;
    bool is_dual() const;
    long uniform_k() const;
    const SchubertSpec& schubert_spec() const;
    const std::vector<MatroidExpr>& sum_blocks() const;

private:
    struct Node;
    explicit MatroidExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace catval
