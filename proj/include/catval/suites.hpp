#pragma once

#include <cstdint>

#include "catval/partitions.hpp"
#include "catval/report.hpp"
#include "catval/subdivision.hpp"

namespace catval {

/// Computed KL / inverse-KL / Z / Whitney rows for C_n^{1,1}, n = 2..7,
/// against the published reference values.
VerifyReport golden_tables_suite();

/// Which first-principles comparisons to run for one (a, b, n).
struct OracleChecks {
    bool tutte = true;     // corank-nullity sum, ground <= 16
    bool whitney = true;   // flat enumeration, ground <= 14
    bool ehrhart = true;   // lattice-count interpolation, ground <= 8
    bool volume = true;    // Eulerian formula vs Ehrhart leading coefficient
    bool bases = true;     // T(1,1) = number of bases, ground <= 14
};

/// Partition-sum invariants of C_n^{a,b} against the independent oracles.
/// Checks whose enumeration cap is exceeded are skipped.
VerifyReport valuative_identity_suite(long a, long b, long n,
                                      const OracleChecks& checks = {});

/// valuative_identity_suite over every (a, b, n) with n(a+b) <= max_ground,
/// optionally fanned out over worker threads; case order is independent of
/// the job count.
VerifyReport oracle_suite(long max_ground, long jobs = 1);

/// zpoly_uniform == zpoly_from_kl for 1 <= k < n <= 12, and Z_{U_{k,k+1}}
/// equals the ballot-sequence Narayana polynomial for k <= 6.
VerifyReport z_consistency_suite();

/// KL constant term 1 and degree bound floor((k-1)/2) for 1 <= k < n <= 12.
VerifyReport kl_structure_suite();

/// One partition's worth of the signed refinement identity
///   sum over lambda != (n) of (-1)^len (p/len)
///       sum over refinements matching mu of prod |K_{sigma^i}| * multinomial
///   = n!/z_mu.
struct CountingContribution {
    Partition lambda;
    Rational raw;         // contribution to the left-hand side
    Rational normalized;  // raw / |K_mu|: appearances of one fixed permutation
};

struct CountingIdentityResult {
    Partition mu;
    Int class_size;      // n!/z_mu
    Rational lhs_total;
    std::vector<CountingContribution> contributions;

    bool pass() const { return lhs_total == Rational(class_size); }
};

CountingIdentityResult counting_identity_check(const Partition& mu);

/// counting_identity_check for every mu != (n), n = 2..n_max.
VerifyReport counting_identity_suite(long n_max);

/// Exhaustive gap-partition tally over all nonempty subsets of [n] against
/// the closed-form count, plus the total 2^n - 1.
VerifyReport gap_count_suite(long n);

/// Signed inclusion-exclusion cover identity at seeded random points and all
/// hypersimplex vertices (delegates to subdivision_check).
VerifyReport subdivision_suite(long a, long b, long n, long trials, std::uint64_t seed);

/// Panhandle Ehrhart identity probe for all a <= a_max, b <= b_max. The
/// identity is a conjecture: the report is informational.
VerifyReport conjecture_suite(long a_max, long b_max);

}  // namespace catval
