#include "catval/catalan_invariants.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "catval/counting.hpp"
#include "catval/partitions.hpp"
#include "catval/uniform_invariants.hpp"

namespace catval {

namespace {

const std::array<InvariantFamily, 5>& families() {
    static const std::array<InvariantFamily, 5> table = {{
        {Family::ehrhart, "ehrhart", "t", ehrhart_uniform},
        {Family::kl, "kl", "t", kl_uniform},
        {Family::inverse_kl, "invkl", "t", inverse_kl_uniform},
        {Family::z, "z", "t", zpoly_uniform},
        {Family::whitney, "whitney", "t", whitney_uniform},
    }};
    return table;
}

void check_args(long a, long b, long n) {
    if (a < 1 || b < 1 || n < 1)
        throw std::invalid_argument("invariant parameters must be positive");
}

template <typename Poly, typename Eval>
Poly partition_sum(long a, long b, long n, Eval&& eval_uniform) {
    // Each distinct part value feeds the same uniform matroid; memoize.
    std::map<long, Poly> per_part;
    auto value = [&](long part) -> const Poly& {
        auto it = per_part.find(part);
        if (it == per_part.end())
            it = per_part.emplace(part, eval_uniform(part * b, part * (a + b))).first;
        return it->second;
    };
    Poly total;
    for (const auto& lambda : partitions(n)) {
        Poly product = Poly::constant(1);
        for (long part : lambda.parts) product = product * value(part);
        total += product.scaled(Rational(Int(1), z_value(lambda)));
    }
    return total;
}

void check_ehrhart_integrality(const UniPoly& p) {
    if (p(Rational(0)) != Rational(1))
        throw std::runtime_error("valuative identity violated");
    for (long t = 1; t <= p.degree() + 2; ++t)
        if (!p(Rational(t)).is_integer())
            throw std::runtime_error("valuative identity violated");
}

}  // namespace

const InvariantFamily& family(Family f) {
    for (const auto& fam : families())
        if (fam.id == f) return fam;
    throw std::logic_error("unknown invariant family");
}

const InvariantFamily* family_by_name(std::string_view name) {
    for (const auto& fam : families())
        if (fam.name == name) return &fam;
    return nullptr;
}

UniPoly catalan_invariant(Family f, long a, long b, long n) {
    check_args(a, b, n);
    const auto& fam = family(f);
    UniPoly result = partition_sum<UniPoly>(a, b, n, fam.uniform);
    if (f == Family::ehrhart) check_ehrhart_integrality(result);
    else if (!result.integer_coefficients())
        throw std::runtime_error("valuative identity violated");
    return result;
}

BiPoly catalan_tutte(long a, long b, long n) {
    check_args(a, b, n);
    BiPoly result = partition_sum<BiPoly>(a, b, n, tutte_uniform);
    if (!result.integer_coefficients())
        throw std::runtime_error("valuative identity violated");
    return result;
}

Rational volume_catalan(long a, long b, long n) {
    check_args(a, b, n);
    const long ground = n * (a + b);
    return Rational(eulerian(ground - 1, n * b), Int(n) * factorial(ground - 1));
}

PanhandleCase panhandle_check(long a, long b) {
    check_args(a, b, 1);
    PanhandleCase result;
    result.a = a;
    result.b = b;
    SchubertSpec spec = schubert_from_r({1, 1, a, b});
    result.lhs = ehrhart_interpolate(system_of_schubert(spec), a + b + 1).poly;
    UniPoly factor({Rational(1), Rational(Int(a + 1), Int(a + b + 1))});
    result.rhs = factor * ehrhart_uniform(b, a + b + 1);
    result.equal = result.lhs == result.rhs;
    return result;
}

}  // namespace catval
