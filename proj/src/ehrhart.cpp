#include "catval/ehrhart.hpp"

#include <stdexcept>

namespace catval {

EhrhartResult ehrhart_interpolate(const PrefixSystem& sys, long degree_hint) {
    if (degree_hint < 0) throw std::invalid_argument("negative degree hint");
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.reserve(static_cast<size_t>(degree_hint) + 1);
    for (long t = 0; t <= degree_hint; ++t)
        nodes.emplace_back(Rational(t), Rational(lattice_points(sys, t)));
    UniPoly poly = interpolate(nodes);
    Rational extra(lattice_points(sys, degree_hint + 1));
    if (poly(Rational(degree_hint + 1)) != extra)
        throw std::runtime_error("degree hint too small");
    if (poly(Rational(0)) != Rational(1))
        throw std::logic_error("Ehrhart polynomial without constant term 1");
    EhrhartResult result;
    result.dim = poly.degree();
    result.leading = poly.leading();
    result.poly = std::move(poly);
    return result;
}

Rational volume_from_ehrhart(const EhrhartResult& e) { return e.leading; }

long ehrhart_degree_hint(const MatroidExpr& m) { return m.ground() - m.components(); }

EhrhartResult ehrhart_of_matroid(const MatroidExpr& m) {
    return ehrhart_interpolate(system_of_matroid(m), ehrhart_degree_hint(m));
}

}  // namespace catval
