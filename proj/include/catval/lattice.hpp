#pragma once

#include <optional>
#include <vector>

#include "catval/prefix_system.hpp"
#include "catval/rational.hpp"

namespace catval {

/// Number of integer points of the system dilated by t >= 0.
///
/// Plain-prefix systems are counted by a dynamic program over (position,
/// prefix sum); it runs in overflow-checked 64-bit arithmetic first and
/// falls back to big integers when a count does not fit. Systems with
/// general circular intervals are counted by pruned enumeration.
Int lattice_points(const PrefixSystem& sys, long t);

/// All integer points of the dilated system, in lexicographic order. Only
/// feasible for small systems; same depth-first walk as the enumeration
/// kernel.
std::vector<std::vector<long>> lattice_point_list(const PrefixSystem& sys, long t);

namespace lattice_kernel {

/// Fast kernel: prefix-sum DP in unsigned 64-bit arithmetic. Requires
/// all_prefix(); returns nullopt if any addition would overflow.
std::optional<unsigned long long> count_prefix_u64(const PrefixSystem& sys, long t);

/// Reference kernel: the same DP with arbitrary-precision counters.
Int count_prefix_big(const PrefixSystem& sys, long t);

/// General kernel: depth-first enumeration with interval-capacity pruning.
/// Handles wrapped intervals; independent of the DP, so it doubles as an
/// equivalence oracle for the other kernels.
Int count_enumerate(const PrefixSystem& sys, long t);

}  // namespace lattice_kernel

}  // namespace catval
