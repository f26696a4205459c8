#include "catval/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace catval {

BiPoly BiPoly::constant(Rational c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(Rational c, int i, int j) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Key{i, j}, std::move(c));
    return p;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational() : it->second;
}

void BiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [key, c] : o.terms_) terms_[key] += c;
    prune();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [key, c] : o.terms_) terms_[key] -= c;
    prune();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.terms_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    out.prune();
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result = constant(1);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

BiPoly BiPoly::swapped() const {
    BiPoly out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.second, key.first}, c);
    return out;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc;
    for (const auto& [key, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < key.first; ++i) term *= x;
        for (int j = 0; j < key.second; ++j) term *= y;
        acc += term;
    }
    return acc;
}

bool BiPoly::integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

std::string BiPoly::str(std::string_view xvar, std::string_view yvar) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second;
        int tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [key, c] : sorted) {
        bool neg = c.is_negative();
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        Rational a = neg ? -c : c;
        bool unit = (a == Rational(1));
        bool has_var = key.first > 0 || key.second > 0;
        if (!has_var || !unit) {
            out += a.is_integer() ? a.num().str() : "(" + a.str() + ")";
        }
        for (auto [v, e] : {std::pair{xvar, key.first}, std::pair{yvar, key.second}}) {
            if (e == 0) continue;
            out += v;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace catval
