#include "catval/prefix_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace catval {

bool PrefixSystem::all_prefix() const {
    return std::all_of(bounds.begin(), bounds.end(), [&](const IntervalBound& b) {
        return b.start == 1 && b.len <= dim;
    });
}

namespace {

// A bound is implied by the box when the complement of its interval alone
// cannot push the interval sum below it: bound <= target - (dim - len).
bool box_implied(long dim, long target, long len, long bound) {
    return bound <= target - (dim - len);
}

void push_bound(PrefixSystem& sys, long start, long len, long bound) {
    if (bound < 1 || box_implied(sys.dim, sys.target, len, bound)) return;
    sys.bounds.push_back({start, len, bound});
}

}  // namespace

PrefixSystem system_of_schubert(const SchubertSpec& spec) {
    PrefixSystem sys;
    sys.dim = spec.ground;
    sys.target = spec.rank;
    for (long j = 1; j <= spec.rank; ++j)
        push_bound(sys, 1, spec.ones[static_cast<size_t>(j - 1)], j);
    return sys;
}

PrefixSystem uniform_system(long k, long n) {
    PrefixSystem sys;
    sys.dim = n;
    sys.target = k;
    return sys;
}

PrefixSystem system_of_matroid(const MatroidExpr& m) {
    if (m.is_uniform()) return uniform_system(m.rank(), m.ground());
    if (m.is_schubert()) return system_of_schubert(m.schubert_spec());
    if (m.is_direct_sum()) {
        PrefixSystem sys;
        sys.dim = m.ground();
        sys.target = m.rank();
        long offset = 0;
        for (const auto& block : m.sum_blocks()) {
            PrefixSystem bs = system_of_matroid(block);
            for (const auto& b : bs.bounds)
                sys.bounds.push_back({b.start + offset, b.len, b.bound});
            // Lower bounds on all block sums pin each of them, given the
            // fixed grand total.
            push_bound(sys, offset + 1, block.ground(), block.rank());
            offset += block.ground();
        }
        return sys;
    }
    throw std::invalid_argument("no inequality system for dual expressions");
}

PrefixSystem rotated_catalan_system(long a, long b, long n, long m) {
    if (a < 1 || b < 1 || n < 1)
        throw std::invalid_argument("Catalan system parameters must be positive");
    if (m < 0 || m > n - 1) throw std::invalid_argument("m out of range");
    PrefixSystem sys;
    sys.dim = n * (a + b);
    sys.target = n * b;
    const long start = (a + b) * m + 1;
    for (long j = 1; j <= n - 1; ++j) push_bound(sys, start, (a + b) * j, j * b);
    return sys;
}

PrefixSystem q_system(const std::vector<long>& A, long a, long b, long n) {
    if (A.empty()) throw std::invalid_argument("Q(A) needs a nonempty index set");
    PrefixSystem sys;
    sys.dim = n * (a + b);
    sys.target = n * b;
    for (long j : A) {
        if (j < 1 || j > n) throw std::invalid_argument("Q(A) index out of range");
        PrefixSystem rotated = rotated_catalan_system(a, b, n, j - 1);
        sys.bounds.insert(sys.bounds.end(), rotated.bounds.begin(), rotated.bounds.end());
    }
    return sys;
}

bool contains(const PrefixSystem& sys, const std::vector<Rational>& x,
              const Rational& dilation) {
    if (static_cast<long>(x.size()) != sys.dim)
        throw std::invalid_argument("point dimension mismatch");
    Rational total;
    for (const auto& xi : x) {
        if (xi < Rational(0) || xi > dilation) return false;
        total += xi;
    }
    if (total != dilation * Rational(sys.target)) return false;
    for (const auto& b : sys.bounds) {
        Rational sum;
        for (long i = 0; i < b.len; ++i) {
            long pos = (b.start - 1 + i) % sys.dim;
            sum += x[static_cast<size_t>(pos)];
        }
        if (sum < dilation * Rational(b.bound)) return false;
    }
    return true;
}

}  // namespace catval
