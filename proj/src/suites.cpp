#include "catval/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "catval/catalan_invariants.hpp"
#include "catval/counting.hpp"
#include "catval/golden.hpp"
#include "catval/oracles.hpp"
#include "catval/uniform_invariants.hpp"

namespace catval {

namespace {

class Stopwatch {
public:
    long elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string abn(long a, long b, long n) {
    return "C(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
           ",n=" + std::to_string(n) + ")";
}

// Deterministic fan-out: results land in input order regardless of jobs.
template <typename F>
std::vector<VerifyReport> parallel_reports(long jobs, long count, F&& f) {
    std::vector<VerifyReport> out(static_cast<size_t>(count));
    if (jobs <= 1) {
        for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(i);
        return out;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            out[static_cast<size_t>(i)] = f(i);
    };
    std::vector<std::thread> pool;
    for (long w = 0; w < std::min(jobs, count); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<std::tuple<long, long, long>> catalan_instances(long max_ground) {
    std::vector<std::tuple<long, long, long>> out;
    for (long s = 2; s <= max_ground; ++s)
        for (long a = 1; a < s; ++a)
            for (long n = 1; n * s <= max_ground; ++n)
                out.emplace_back(a, s - a, n);
    return out;
}

}  // namespace

VerifyReport golden_tables_suite() {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "tables";
    for (Family f : {Family::kl, Family::inverse_kl, Family::z, Family::whitney}) {
        const auto& fam = family(f);
        for (const auto& row : golden_rows(f)) {
            UniPoly computed = catalan_invariant(f, 1, 1, row.n);
            std::string instance = fam.name + " n=" + std::to_string(row.n);
            if (row.partial) {
                std::string expected = "published coefficients";
                report.cases.push_back({instance + " (partial)", expected,
                                        row.matches(computed) ? expected
                                                              : computed.str(fam.variable),
                                        row.matches(computed)});
            } else {
                report.add(instance, UniPoly::from_ints(row.coefficients).str(fam.variable),
                           computed.str(fam.variable));
            }
        }
    }
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport valuative_identity_suite(long a, long b, long n, const OracleChecks& checks) {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "oracles " + abn(a, b, n);
    const long ground = n * (a + b);
    MatroidExpr m = MatroidExpr::schubert(catalan_matroid(a, b, n));
    const std::string tag = abn(a, b, n);

    if (checks.tutte && ground <= 16) {
        BiPoly closed = catalan_tutte(a, b, n);
        BiPoly brute = tutte_bruteforce(m);
        report.add(tag + " tutte", brute.str(), closed.str());
        if (checks.bases && ground <= 14) {
            Int n_bases = static_cast<long>(m.bases(14).size());
            report.add(tag + " tutte(1,1)=#bases", n_bases.str(),
                       brute.eval(1, 1).str());
        }
    }
    if (checks.whitney && ground <= 14) {
        UniPoly closed = catalan_invariant(Family::whitney, a, b, n);
        UniPoly brute = whitney_bruteforce(m);
        report.add(tag + " whitney", brute.str(), closed.str());
    }
    if (checks.ehrhart && ground <= 8) {
        UniPoly closed = catalan_invariant(Family::ehrhart, a, b, n);
        EhrhartResult counted = ehrhart_of_matroid(m);
        report.add(tag + " ehrhart", counted.poly.str(), closed.str());
        if (checks.volume)
            report.add(tag + " volume", volume_from_ehrhart(counted).str(),
                       volume_catalan(a, b, n).str());
    }
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport oracle_suite(long max_ground, long jobs) {
    Stopwatch watch;
    auto instances = catalan_instances(max_ground);
    auto parts = parallel_reports(jobs, static_cast<long>(instances.size()), [&](long i) {
        auto [a, b, n] = instances[static_cast<size_t>(i)];
        return valuative_identity_suite(a, b, n);
    });
    VerifyReport report;
    report.suite = "oracles";
    for (auto& part : parts)
        for (auto& c : part.cases) report.cases.push_back(std::move(c));
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport z_consistency_suite() {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "z-consistency";
    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            std::string instance =
                "Z(U_{" + std::to_string(k) + "," + std::to_string(n) + "})";
            report.add(instance + " coefficient formula vs KL route",
                       zpoly_from_kl(k, n).str(), zpoly_uniform(k, n).str());
        }
    for (long k = 1; k <= 6; ++k)
        report.add("Z(U_{" + std::to_string(k) + "," + std::to_string(k + 1) +
                       "}) vs Narayana",
                   narayana_poly(k + 1).str(), zpoly_uniform(k, k + 1).str());
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport kl_structure_suite() {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "kl-structure";
    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            UniPoly p = kl_uniform(k, n);
            std::string instance =
                "P(U_{" + std::to_string(k) + "," + std::to_string(n) + "})";
            report.add(instance + " constant term", "1", p.coeff(0).str());
            bool deg_ok = p.degree() <= (k - 1) / 2;
            report.cases.push_back({instance + " degree bound",
                                    "<= " + std::to_string((k - 1) / 2),
                                    std::to_string(p.degree()), deg_ok});
        }
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

CountingIdentityResult counting_identity_check(const Partition& mu) {
    const long n = mu.sum();
    if (n < 2 || mu.length() < 2)
        throw std::invalid_argument("identity needs mu != (n)");
    CountingIdentityResult result;
    result.mu = mu;
    result.class_size = cycle_class_size(mu);

    std::vector<long> mu_sorted = mu.parts;
    std::sort(mu_sorted.begin(), mu_sorted.end());

    for (const auto& lambda : partitions(n)) {
        if (lambda.length() == 1) continue;  // lambda != (n)
        Rational matches;
        for (const auto& refinement : refinements(lambda)) {
            std::vector<long> flat = refinement.flat.parts;
            std::sort(flat.begin(), flat.end());
            if (flat != mu_sorted) continue;
            Int product = 1;
            for (const auto& block : refinement.blocks) product *= cycle_class_size(block);
            matches += Rational(product);
        }
        if (matches.is_zero()) continue;
        Rational raw = matches * Rational(multinomial(n, lambda.parts)) *
                       Rational(perm_count(lambda), Int(lambda.length()));
        if (lambda.length() % 2 == 1) raw = -raw;
        result.lhs_total += raw;
        result.contributions.push_back(
            {lambda, raw, raw / Rational(result.class_size)});
    }
    return result;
}

VerifyReport counting_identity_suite(long n_max) {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "counting";
    for (long n = 2; n <= n_max; ++n)
        for (const auto& mu : partitions(n)) {
            if (mu.length() < 2) continue;
            auto result = counting_identity_check(mu);
            report.add("mu=" + mu.str() + " n=" + std::to_string(n),
                       Rational(result.class_size).str(), result.lhs_total.str());
        }
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport gap_count_suite(long n) {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "gaps n=" + std::to_string(n);
    std::map<Partition, Int> tally;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::vector<long> subset;
        for (long e = 0; e < n; ++e)
            if (mask & (1UL << e)) subset.push_back(e + 1);
        ++tally[gap_partition(subset, n)];
    }
    Int total = 0;
    for (const auto& lambda : partitions(n)) {
        Int brute = tally.count(lambda) ? tally[lambda] : Int(0);
        total += brute;
        report.add("lambda=" + lambda.str(), gap_subset_count(n, lambda).str(),
                   brute.str());
    }
    report.add("total over lambda", (Int(boost::multiprecision::pow(Int(2), static_cast<unsigned>(n))) - 1).str(),
               total.str());
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport subdivision_suite(long a, long b, long n, long trials, std::uint64_t seed) {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "subdivision " + abn(a, b, n);
    report.seed = seed;
    SubdivisionReport sub = subdivision_check(a, b, n, trials, seed);
    std::string actual = std::to_string(sub.counterexamples.size()) + " counterexamples";
    for (size_t i = 0; i < sub.counterexamples.size() && i < 5; ++i)
        actual += "; " + sub.counterexamples[i];
    report.add(abn(a, b, n) + " " + std::to_string(sub.vertex_points) + " vertices + " +
                   std::to_string(sub.sampled_points) + " samples",
               "0 counterexamples", actual);
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

VerifyReport conjecture_suite(long a_max, long b_max) {
    Stopwatch watch;
    VerifyReport report;
    report.suite = "conjecture";
    for (long a = 1; a <= a_max; ++a)
        for (long b = 1; b <= b_max; ++b) {
            PanhandleCase probe = panhandle_check(a, b);
            report.add("panhandle a=" + std::to_string(a) + " b=" + std::to_string(b),
                       "equal", probe.equal ? "equal" : "unequal");
        }
    report.runtime_ms = watch.elapsed_ms();
    return report;
}

}  // namespace catval
