#pragma once

#include <map>
#include <string>
#include <vector>

#include "catval/rational.hpp"

namespace catval {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;

    long sum() const;
    long length() const { return static_cast<long>(parts.size()); }
    /// part value -> number of occurrences (the alpha_i of z_lambda).
    std::map<long, long> multiplicities() const;
    std::string str() const;  // "(3,2,1,1)"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Ordered sequence of positive parts.
struct Composition {
    std::vector<long> parts;

    long sum() const;
    long length() const { return static_cast<long>(parts.size()); }
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All partitions of n in reverse-lexicographic order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). partitions(0) is the single empty
/// partition.
std::vector<Partition> partitions(long n);

/// z_lambda = prod_i i^{alpha_i} alpha_i!.
Int z_value(const Partition& lambda);

/// Number of distinct orderings of the multiset of parts,
/// len! / (alpha_1! alpha_2! ...).
Int perm_count(const Partition& lambda);

/// Size n!/z_lambda of the conjugacy class of cycle type lambda in S_n.
Int cycle_class_size(const Partition& lambda);

/// Circular gaps of a nonempty subset of [n], sorted decreasingly: a partition
/// of n with |subset| parts.
Partition gap_partition(std::vector<long> subset, long n);

/// Closed-form count (n/len) * perm_count of subsets of [n] whose gap
/// partition equals lambda. Throws std::logic_error if the formula value is
/// not an integer (cannot happen for valid input).
Int gap_subset_count(long n, const Partition& lambda);

/// Least cyclic period of the composition: the least m >= 1 such that
/// rotating the parts by m positions leaves the composition unchanged, and
/// length() when only the full rotation does. Always divides length().
long least_period(const Composition& gamma);

/// A refinement of lambda: one partition per part, concatenated.
struct Refinement {
    Composition flat;
    std::vector<Partition> blocks;  // blocks[i] is a partition of lambda.parts[i]
};

/// All refinements of lambda, enumerated block by block.
std::vector<Refinement> refinements(const Partition& lambda);

}  // namespace catval
