#include "catval/subdivision.hpp"

#include <stdexcept>

#include "catval/matroid.hpp"

namespace catval {

namespace {

std::string point_str(const std::vector<Rational>& x) {
    std::string out = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += x[i].str();
    }
    return out + ")";
}

// Nonempty subsets of [n] as bitmasks, with their Q-systems prebuilt.
struct QTable {
    std::vector<PrefixSystem> systems;
    std::vector<int> sign;  // (-1)^{|A|-1}

    QTable(long a, long b, long n) {
        for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
            std::vector<long> A;
            for (long j = 0; j < n; ++j)
                if (mask & (1UL << j)) A.push_back(j + 1);
            systems.push_back(q_system(A, a, b, n));
            sign.push_back(A.size() % 2 == 1 ? 1 : -1);
        }
    }

    long signed_membership(const std::vector<Rational>& x) const {
        long total = 0;
        for (size_t i = 0; i < systems.size(); ++i)
            if (contains(systems[i], x)) total += sign[i];
        return total;
    }
};

}  // namespace

std::vector<Rational> sample_box_slice_point(std::mt19937_64& rng, long dim, long target) {
    std::uniform_int_distribution<long> den_dist(1, 64);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Rational> x;
        x.reserve(static_cast<size_t>(dim));
        Rational sum;
        for (long i = 0; i + 1 < dim; ++i) {
            long q = den_dist(rng);
            long p = std::uniform_int_distribution<long>(0, q)(rng);
            x.emplace_back(Int(p), Int(q));
            sum += x.back();
        }
        Rational last = Rational(target) - sum;
        if (last < Rational(0) || last > Rational(1)) continue;
        x.push_back(last);
        return x;
    }
    throw std::runtime_error("box slice sampling failed to converge");
}

SubdivisionReport subdivision_check(long a, long b, long n, long trials,
                                    std::uint64_t seed) {
    if (n < 1 || n > 16) throw std::invalid_argument("subdivision check needs 1 <= n <= 16");
    SubdivisionReport report;
    report.a = a;
    report.b = b;
    report.n = n;
    report.seed = seed;
    report.trials = trials;

    const long dim = n * (a + b);
    const long target = n * b;
    QTable table(a, b, n);
    auto check_point = [&](const std::vector<Rational>& x) {
        long rhs = table.signed_membership(x);
        if (rhs != 1)
            report.counterexamples.push_back(point_str(x) + " signed sum " +
                                             std::to_string(rhs));
    };

    // Every 0/1 vertex of the hypersimplex.
    for (const auto& basis : MatroidExpr::uniform(target, dim).bases(dim)) {
        std::vector<Rational> x(static_cast<size_t>(dim), Rational(0));
        for (long e : basis) x[static_cast<size_t>(e - 1)] = Rational(1);
        check_point(x);
        ++report.vertex_points;
    }

    std::mt19937_64 rng(seed);
    for (long i = 0; i < trials; ++i) {
        check_point(sample_box_slice_point(rng, dim, target));
        ++report.sampled_points;
    }
    return report;
}

}  // namespace catval
