#pragma once

#include <map>
#include <span>
#include <vector>

#include "catval/catalan_invariants.hpp"

namespace catval {

/// Reference row for C_n^{1,1}: either the full ascending coefficient vector,
/// or (when partial) just the coefficients that are known, keyed by degree.
struct GoldenRow {
    long n = 0;
    std::vector<long> coefficients;  // ascending; empty when partial
    bool partial = false;
    std::map<long, long> known;  // degree -> coefficient, for partial rows

    bool matches(const UniPoly& p) const;
};

/// Published reference values for n = 2..7; defined for kl, invkl, z and
/// whitney (the Z row for n = 7 is partial).
std::span<const GoldenRow> golden_rows(Family f);

}  // namespace catval
