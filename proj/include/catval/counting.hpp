#pragma once

#include <vector>

#include "catval/rational.hpp"

namespace catval {

Int factorial(long n);

/// Binomial coefficient with the combinatorial conventions used throughout:
/// C(n, 0) = 1 for every n (including negative n), and C(n, k) = 0 whenever
/// k < 0, n < 0, or k > n.
Int binomial(long n, long k);

/// n! / (parts_1! parts_2! ...). Zero when the parts do not fit into n.
Int multinomial(long n, const std::vector<long>& parts);

/// Eulerian number A(n, k): permutations of [n] with exactly k - 1 descents,
/// for 1 <= k <= n; zero outside that range.
Int eulerian(long n, long k);

/// Stirling number of the second kind S(r, k).
Int stirling2(long r, long k);

}  // namespace catval
