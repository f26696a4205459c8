// Acceptance suite: every release criterion as one pass/fail line.
// Usage: catval-acceptance [N ...]  (run the numbered criteria; default all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "catval/catalan_invariants.hpp"
#include "catval/counting.hpp"
#include "catval/golden.hpp"
#include "catval/lattice.hpp"
#include "catval/oracles.hpp"
#include "catval/suites.hpp"
#include "catval/uniform_invariants.hpp"

using namespace catval;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<std::tuple<long, long, long>> catalan_instances(long max_ground) {
    std::vector<std::tuple<long, long, long>> out;
    for (long s = 2; s <= max_ground; ++s)
        for (long a = 1; a < s; ++a)
            for (long n = 1; n * s <= max_ground; ++n)
                out.emplace_back(a, s - a, n);
    return out;
}

std::string abn(long a, long b, long n) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ")";
}

Outcome golden_criterion(Family f) {
    Outcome out;
    for (const auto& row : golden_rows(f))
        out.require(row.matches(catalan_invariant(f, 1, 1, row.n)),
                    "n=" + std::to_string(row.n));
    return out;
}

Outcome c01_kl_golden() { return golden_criterion(Family::kl); }
Outcome c02_invkl_golden() { return golden_criterion(Family::inverse_kl); }
Outcome c03_z_golden() { return golden_criterion(Family::z); }
Outcome c04_whitney_golden() { return golden_criterion(Family::whitney); }

Outcome c05_tutte_oracle() {
    Outcome out;
    for (auto [a, b, n] : catalan_instances(12)) {
        MatroidExpr m = MatroidExpr::schubert(catalan_matroid(a, b, n));
        out.require(catalan_tutte(a, b, n) == tutte_bruteforce(m), "tutte" + abn(a, b, n));
    }
    return out;
}

Outcome c06_whitney_oracle() {
    Outcome out;
    for (auto [a, b, n] : catalan_instances(12)) {
        MatroidExpr m = MatroidExpr::schubert(catalan_matroid(a, b, n));
        out.require(catalan_invariant(Family::whitney, a, b, n) == whitney_bruteforce(m),
                    "whitney" + abn(a, b, n));
    }
    return out;
}

Outcome c07_ehrhart_oracle_and_positivity() {
    Outcome out;
    for (auto [a, b, n] : catalan_instances(8)) {
        MatroidExpr m = MatroidExpr::schubert(catalan_matroid(a, b, n));
        out.require(catalan_invariant(Family::ehrhart, a, b, n) ==
                        ehrhart_of_matroid(m).poly,
                    "ehrhart" + abn(a, b, n));
    }
    for (auto [a, b, n] : catalan_instances(14)) {
        UniPoly e = catalan_invariant(Family::ehrhart, a, b, n);
        bool positive = !e.is_zero();
        for (const auto& c : e.coeffs()) positive = positive && c > Rational(0);
        out.require(positive, "positivity" + abn(a, b, n));
    }
    return out;
}

Outcome c08_volume() {
    Outcome out;
    for (auto [a, b, n] : catalan_instances(8)) {
        MatroidExpr m = MatroidExpr::schubert(catalan_matroid(a, b, n));
        const long ground = n * (a + b);
        Rational leading = ehrhart_of_matroid(m).leading;
        Rational normalized = leading * Rational(Int(n) * factorial(ground - 1));
        out.require(normalized == Rational(eulerian(ground - 1, n * b)),
                    "volume" + abn(a, b, n));
        out.require(volume_catalan(a, b, n) == leading, "formula" + abn(a, b, n));
    }
    MatroidExpr c2 = MatroidExpr::schubert(catalan_matroid(1, 1, 2));
    out.require(ehrhart_of_matroid(c2).leading == Rational(Int(1), Int(3)),
                "vol(P(C_2)) != 1/3");
    return out;
}

Outcome c09_z_consistency() {
    Outcome out;
    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k)
            out.require(zpoly_uniform(k, n) == zpoly_from_kl(k, n),
                        "z(" + std::to_string(k) + "," + std::to_string(n) + ")");
    for (long k = 1; k <= 6; ++k)
        out.require(zpoly_uniform(k, k + 1) == narayana_poly(k + 1),
                    "narayana k=" + std::to_string(k));
    return out;
}

Outcome c10_kl_structure() {
    Outcome out;
    for (long n = 2; n <= 12; ++n)
        for (long k = 1; k < n; ++k) {
            UniPoly p = kl_uniform(k, n);
            std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
            out.require(p.coeff(0) == Rational(1), "c0" + tag);
            out.require(p.degree() <= (k - 1) / 2, "deg" + tag);
        }
    return out;
}

Outcome c11_gap_counts() {
    Outcome out;
    for (long n = 2; n <= 12; ++n) {
        VerifyReport report = gap_count_suite(n);
        out.require(report.pass(), "n=" + std::to_string(n));
    }
    return out;
}

Outcome c12_subdivision() {
    Outcome out;
    for (long n = 2; n <= 5; ++n) {
        SubdivisionReport report = subdivision_check(1, 1, n, 1000, 42);
        out.require(report.pass(),
                    "n=" + std::to_string(n) + ": " +
                        std::to_string(report.counterexamples.size()) + " counterexamples");
    }
    return out;
}

Outcome c13_counting_identity() {
    Outcome out;
    for (long n = 2; n <= 7; ++n)
        for (const auto& mu : partitions(n)) {
            if (mu.length() < 2) continue;
            out.require(counting_identity_check(mu).pass(), "mu=" + mu.str());
        }
    auto worked = counting_identity_check(Partition{{2, 2, 1, 1}});
    std::multiset<Rational> contributions;
    for (const auto& c : worked.contributions) contributions.insert(c.normalized);
    std::multiset<Rational> expected = {Rational(6), Rational(-8), Rational(-2),
                                        Rational(-2), Rational(3),  Rational(2),
                                        Rational(2)};
    out.require(contributions == expected, "per-lambda contributions for (2,2,1,1)");
    return out;
}

Outcome c14_matroid_polytope_coherence() {
    Outcome out;
    std::vector<MatroidExpr> matroids;
    for (long n = 1; n <= 5; ++n)
        for (long k = 1; k < n; ++k) matroids.push_back(MatroidExpr::uniform(k, n));
    for (auto [a, b, n] : catalan_instances(10))
        matroids.push_back(MatroidExpr::schubert(catalan_matroid(a, b, n)));
    matroids.push_back(MatroidExpr::schubert(schubert_from_r({1, 1, 2, 1, 1, 3})));
    matroids.push_back(MatroidExpr::schubert(schubert_from_r({2, 1, 2, 3})));
    matroids.push_back(MatroidExpr::direct_sum(
        {MatroidExpr::uniform(2, 4), MatroidExpr::schubert(catalan_matroid(1, 1, 2))}));
    matroids.push_back(MatroidExpr::direct_sum(
        {MatroidExpr::uniform(1, 3), MatroidExpr::uniform(1, 2)}));

    for (const auto& m : matroids) {
        if (m.ground() > 10) continue;
        auto bases = m.bases();
        std::set<GroundSubset> basis_set(bases.begin(), bases.end());
        std::set<GroundSubset> lattice_set;
        for (const auto& p : lattice_point_list(system_of_matroid(m), 1)) {
            GroundSubset s;
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] == 1) s.push_back(static_cast<long>(i) + 1);
                else if (p[i] != 0) out.require(false, m.str() + " non-0/1 point");
            lattice_set.insert(std::move(s));
        }
        out.require(lattice_set == basis_set, m.str() + " lattice points != bases");
        out.require(tutte_bruteforce(m).eval(1, 1) == Rational(Int(bases.size())),
                    m.str() + " T(1,1) != #bases");
    }
    return out;
}

Outcome c15_conjecture_probe() {
    Outcome out;
    long decisions = 0;
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            PanhandleCase probe = panhandle_check(a, b);
            ++decisions;
            if (a == 1 && b == 1) out.require(probe.equal, "(1,1) not equal");
            out.detail += (out.detail.empty() ? "" : ", ") + std::string("(") +
                          std::to_string(a) + "," + std::to_string(b) +
                          (probe.equal ? ")=equal" : ")=unequal");
        }
    out.require(decisions == 9, "missing decisions");
    return out;
}

struct Criterion {
    int id;
    const char* slug;
    double limit_seconds;
    std::function<Outcome()> run;
    bool informational = false;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "kl-golden-table", 5, c01_kl_golden},
        {2, "inverse-kl-golden-table", 5, c02_invkl_golden},
        {3, "z-golden-table", 5, c03_z_golden},
        {4, "whitney-golden-table", 5, c04_whitney_golden},
        {5, "tutte-oracle-equivalence", 60, c05_tutte_oracle},
        {6, "whitney-oracle-equivalence", 60, c06_whitney_oracle},
        {7, "ehrhart-oracle-and-positivity", 120, c07_ehrhart_oracle_and_positivity},
        {8, "volume-eulerian-identity", 60, c08_volume},
        {9, "z-consistency-and-narayana", 10, c09_z_consistency},
        {10, "kl-structure", 5, c10_kl_structure},
        {11, "gap-partition-counts", 30, c11_gap_counts},
        {12, "subdivision-identity", 60, c12_subdivision},
        {13, "counting-identity", 30, c13_counting_identity},
        {14, "matroid-polytope-coherence", 120, c14_matroid_polytope_coherence},
        {15, "conjecture-probe", 60, c15_conjecture_probe, true},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (!selected.empty() && !selected.count(criterion.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (seconds > criterion.limit_seconds) {
            outcome.pass = false;
            outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        const char* tag = outcome.pass ? "PASS" : "FAIL";
        if (criterion.informational && outcome.pass) tag = "INFO";
        std::printf("[%s] %02d %s (%.2fs < %.0fs)%s%s\n", tag, criterion.id,
                    criterion.slug, seconds, criterion.limit_seconds,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    return failures;
}
