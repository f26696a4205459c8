#include "catval/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace catval {
namespace lattice_kernel {
namespace {

struct Overflow {};

// Prefix lower bounds scaled by t, indexed by position 0..dim.
std::vector<long> prefix_lower(const PrefixSystem& sys, long t) {
    std::vector<long> lower(static_cast<size_t>(sys.dim) + 1, 0);
    for (const auto& b : sys.bounds)
        lower[static_cast<size_t>(b.len)] =
            std::max(lower[static_cast<size_t>(b.len)], b.bound * t);
    return lower;
}

template <typename Count, typename Add>
Count count_prefix_dp(const PrefixSystem& sys, long t, Add add) {
    if (t < 0) throw std::invalid_argument("negative dilation");
    if (!sys.all_prefix()) throw std::logic_error("DP kernel needs prefix bounds");
    const long total = sys.target * t;
    if (total < 0 || total > sys.dim * t) return Count(0);
    auto lower = prefix_lower(sys, t);

    // dp[s] = number of ways to choose x_1..x_p with prefix sum s.
    std::vector<Count> dp(static_cast<size_t>(total) + 1, Count(0));
    dp[0] = Count(1);
    for (long p = 1; p <= sys.dim; ++p) {
        std::vector<Count> next(static_cast<size_t>(total) + 1, Count(0));
        const long lo_state = std::max(lower[static_cast<size_t>(p)],
                                       total - (sys.dim - p) * t);
        const long hi_state = std::min(total, p * t);
        for (long s = lo_state; s <= hi_state; ++s) {
            Count acc(0);
            for (long x = 0; x <= std::min(t, s); ++x)
                acc = add(acc, dp[static_cast<size_t>(s - x)]);
            next[static_cast<size_t>(s)] = acc;
        }
        dp = std::move(next);
    }
    return dp[static_cast<size_t>(total)];
}

struct EnumContext {
    const PrefixSystem& sys;
    long t;
    long total;
    // For each position (0-based), the constraints covering it.
    std::vector<std::vector<size_t>> covering;
    std::vector<long> acc;        // partial sum per constraint
    std::vector<long> remaining;  // unassigned covered positions per constraint
    std::vector<long> point;
    long assigned_sum = 0;

    explicit EnumContext(const PrefixSystem& s, long dilation)
        : sys(s), t(dilation), total(s.target * dilation),
          covering(static_cast<size_t>(s.dim)),
          acc(s.bounds.size(), 0), remaining(s.bounds.size(), 0),
          point(static_cast<size_t>(s.dim), 0) {
        for (size_t c = 0; c < s.bounds.size(); ++c)
            for (long pos = 1; pos <= s.dim; ++pos)
                if (s.bounds[c].covers(s.dim, pos)) {
                    covering[static_cast<size_t>(pos - 1)].push_back(c);
                    ++remaining[c];
                }
    }

    // Walk coordinates depth-first; visit() is called once per lattice point.
    void run(long pos, const std::function<void()>& visit) {
        if (pos == sys.dim) {
            if (assigned_sum == total) visit();
            return;
        }
        const long rest = sys.dim - pos - 1;
        const long xmax = std::min(t, total - assigned_sum);
        const long xmin = std::max<long>(0, total - assigned_sum - rest * t);
        for (long x = xmin; x <= xmax; ++x) {
            bool feasible = true;
            for (size_t c : covering[static_cast<size_t>(pos)]) {
                // Even filling every remaining covered slot to t must reach
                // the bound.
                if (acc[c] + x + (remaining[c] - 1) * t < sys.bounds[c].bound * t) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            for (size_t c : covering[static_cast<size_t>(pos)]) {
                acc[c] += x;
                --remaining[c];
            }
            point[static_cast<size_t>(pos)] = x;
            assigned_sum += x;
            run(pos + 1, visit);
            assigned_sum -= x;
            for (size_t c : covering[static_cast<size_t>(pos)]) {
                acc[c] -= x;
                ++remaining[c];
            }
        }
    }
};

constexpr long kEnumerationDimCap = 18;

}  // namespace

std::optional<unsigned long long> count_prefix_u64(const PrefixSystem& sys, long t) {
    using U = unsigned long long;
    try {
        return count_prefix_dp<U>(sys, t, [](U a, U b) {
            U out;
            if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
            return out;
        });
    } catch (const Overflow&) {
        return std::nullopt;
    }
}

Int count_prefix_big(const PrefixSystem& sys, long t) {
    return count_prefix_dp<Int>(sys, t, [](Int a, const Int& b) { return a + b; });
}

Int count_enumerate(const PrefixSystem& sys, long t) {
    if (t < 0) throw std::invalid_argument("negative dilation");
    if (sys.dim > kEnumerationDimCap) throw std::runtime_error("enumeration too large");
    EnumContext ctx(sys, t);
    Int count = 0;
    ctx.run(0, [&] { ++count; });
    return count;
}

}  // namespace lattice_kernel

Int lattice_points(const PrefixSystem& sys, long t) {
    if (sys.all_prefix()) {
        if (auto fast = lattice_kernel::count_prefix_u64(sys, t)) return Int(*fast);
        return lattice_kernel::count_prefix_big(sys, t);
    }
    return lattice_kernel::count_enumerate(sys, t);
}

std::vector<std::vector<long>> lattice_point_list(const PrefixSystem& sys, long t) {
    if (t < 0) throw std::invalid_argument("negative dilation");
    if (sys.dim > lattice_kernel::kEnumerationDimCap)
        throw std::runtime_error("enumeration too large");
    lattice_kernel::EnumContext ctx(sys, t);
    std::vector<std::vector<long>> points;
    ctx.run(0, [&] { points.push_back(ctx.point); });
    return points;
}

}  // namespace catval
