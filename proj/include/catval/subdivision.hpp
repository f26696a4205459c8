#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catval/prefix_system.hpp"
#include "catval/rational.hpp"

namespace catval {

/// Outcome of checking the signed cover identity
///   [x in P(U_n^{a,b})] = sum over nonempty A of (-1)^{|A|-1} [x in Q(A)]
/// at random rational points of the hypersimplex and at all of its vertices.
struct SubdivisionReport {
    long a = 0, b = 0, n = 0;
    std::uint64_t seed = 0;
    long trials = 0;
    long sampled_points = 0;
    long vertex_points = 0;
    std::vector<std::string> counterexamples;

    bool pass() const { return counterexamples.empty(); }
};

/// Random rational point with all coordinates in [0, 1], coordinate sum equal
/// to target, and sampled denominators bounded by 64. Rejection-samples the
/// completion coordinate; throws after too many rejections.
std::vector<Rational> sample_box_slice_point(std::mt19937_64& rng, long dim, long target);

SubdivisionReport subdivision_check(long a, long b, long n, long trials,
                                    std::uint64_t seed);

}  // namespace catval
