#include "catval/unipoly.hpp"

#include <algorithm>

namespace catval {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Rational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(Rational c, int power) {
    std::vector<Rational> v(static_cast<size_t>(power) + 1);
    v[static_cast<size_t>(power)] = std::move(c);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
    return coeffs_[static_cast<size_t>(i)];
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(1);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool UniPoly::integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

namespace {

std::string coeff_str(const Rational& c) {
    if (c.is_integer()) return c.num().str();
    return "(" + c.str() + ")";
}

}  // namespace

std::string UniPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        bool neg = c.is_negative();
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        Rational a = neg ? -c : c;
        bool unit = (a == Rational(1));
        if (i == 0 || !unit) out += coeff_str(a);
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& nodes) {
    const size_t n = nodes.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("degenerate interpolation");

    // Newton divided differences: table[i] holds f[x_i..x_{i+level}].
    std::vector<Rational> table(n);
    for (size_t i = 0; i < n; ++i) table[i] = nodes[i].second;
    UniPoly result;
    UniPoly basis = UniPoly::constant(1);
    for (size_t level = 0; level < n; ++level) {
        result += basis.scaled(table[0]);
        if (level + 1 == n) break;
        for (size_t i = 0; i + level + 1 < n; ++i)
            table[i] = (table[i + 1] - table[i]) /
                       (nodes[i + level + 1].first - nodes[i].first);
        table.pop_back();
        basis = basis * UniPoly({-nodes[level].first, Rational(1)});
    }
    return result;
}

}  // namespace catval
