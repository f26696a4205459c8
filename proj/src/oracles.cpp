#include "catval/oracles.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace catval {

BiPoly tutte_bruteforce(const MatroidExpr& m, long ground_cap) {
    const long g = m.ground();
    if (g > ground_cap) throw std::runtime_error("enumeration too large");
    const long rank = m.rank();

    // Tally subsets by (corank, nullity) first; expand the binomials once.
    std::map<std::pair<long, long>, long> tally;
    for (unsigned long mask = 0; mask < (1UL << g); ++mask) {
        GroundSubset subset;
        for (long e = 0; e < g; ++e)
            if (mask & (1UL << e)) subset.push_back(e + 1);
        long r = m.rank_of(subset);
        ++tally[{rank - r, static_cast<long>(subset.size()) - r}];
    }

    const BiPoly xm1 = BiPoly::var_x() - BiPoly::constant(1);
    const BiPoly ym1 = BiPoly::var_y() - BiPoly::constant(1);
    std::vector<BiPoly> xpow{BiPoly::constant(1)}, ypow{BiPoly::constant(1)};
    for (long i = 1; i <= rank; ++i) xpow.push_back(xpow.back() * xm1);
    for (long i = 1; i <= g - rank; ++i) ypow.push_back(ypow.back() * ym1);

    BiPoly t;
    for (const auto& [key, count] : tally)
        t += (xpow[static_cast<size_t>(key.first)] *
              ypow[static_cast<size_t>(key.second)])
                 .scaled(Rational(count));
    return t;
}

UniPoly whitney_bruteforce(const MatroidExpr& m, long ground_cap) {
    auto counts = m.flats_by_rank(ground_cap);
    std::vector<Rational> coeffs(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rational(counts[i]);
    return UniPoly{std::move(coeffs)};
}

namespace {

void walk_ballot(long up_left, long down_left, long height, long peaks,
                 bool last_was_up, std::vector<long>& peak_counts) {
    if (up_left == 0 && down_left == 0) {
        ++peak_counts[static_cast<size_t>(peaks)];
        return;
    }
    if (up_left > 0)
        walk_ballot(up_left - 1, down_left, height + 1, peaks, true, peak_counts);
    if (down_left > 0 && height > 0)
        walk_ballot(up_left, down_left - 1, height - 1, peaks + (last_was_up ? 1 : 0),
                    false, peak_counts);
}

}  // namespace

UniPoly narayana_poly(long semilength) {
    if (semilength < 1) throw std::invalid_argument("semilength must be positive");
    std::vector<long> peak_counts(static_cast<size_t>(semilength) + 1, 0);
    walk_ballot(semilength, semilength, 0, 0, false, peak_counts);
    std::vector<Rational> coeffs;
    for (long p = 1; p <= semilength; ++p)
        coeffs.emplace_back(peak_counts[static_cast<size_t>(p)]);
    return UniPoly{std::move(coeffs)};
}

}  // namespace catval
