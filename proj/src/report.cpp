#include "catval/report.hpp"

#include <stdexcept>

namespace catval {

bool VerifyReport::pass() const { return failures() == 0; }

long VerifyReport::failures() const {
    long n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

void VerifyReport::add(std::string instance, std::string expected, std::string actual) {
    bool ok = expected == actual;
    cases.push_back({std::move(instance), std::move(expected), std::move(actual), ok});
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"instance", c.instance},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"pass", c.pass}});
    nlohmann::json j{{"suite", report.suite},
                     {"cases", std::move(cases)},
                     {"runtime_ms", report.runtime_ms}};
    if (report.seed) j["seed"] = *report.seed;
    return j;
}

VerifyReport report_from_json(const nlohmann::json& j) {
    VerifyReport report;
    report.suite = j.at("suite").get<std::string>();
    if (j.contains("seed")) report.seed = j.at("seed").get<std::uint64_t>();
    report.runtime_ms = j.at("runtime_ms").get<long>();
    for (const auto& c : j.at("cases"))
        report.cases.push_back({c.at("instance").get<std::string>(),
                                c.at("expected").get<std::string>(),
                                c.at("actual").get<std::string>(),
                                c.at("pass").get<bool>()});
    return report;
}

ResultRecord ResultRecord::of_unipoly(const UniPoly& p) {
    ResultRecord r;
    r.kind = "unipoly";
    for (const auto& c : p.coeffs()) r.coefficients.push_back(c.str());
    return r;
}

ResultRecord ResultRecord::of_bipoly(const BiPoly& p) {
    ResultRecord r;
    r.kind = "bipoly";
    for (const auto& [key, c] : p.terms())
        r.terms.emplace_back(key.first, key.second, c.str());
    return r;
}

ResultRecord ResultRecord::of_rational(const Rational& v) {
    ResultRecord r;
    r.kind = "rational";
    r.value = v.str();
    return r;
}

UniPoly ResultRecord::unipoly() const {
    if (kind != "unipoly") throw std::logic_error("record does not hold a polynomial");
    std::vector<Rational> coeffs;
    coeffs.reserve(coefficients.size());
    for (const auto& s : coefficients) coeffs.push_back(Rational::parse(s));
    return UniPoly{std::move(coeffs)};
}

BiPoly ResultRecord::bipoly() const {
    if (kind != "bipoly") throw std::logic_error("record does not hold a Tutte polynomial");
    BiPoly p;
    for (const auto& [i, j, c] : terms) p += BiPoly::monomial(Rational::parse(c), i, j);
    return p;
}

Rational ResultRecord::rational() const {
    if (kind != "rational") throw std::logic_error("record does not hold a rational");
    return Rational::parse(value);
}

std::string ResultRecord::text() const {
    if (kind == "unipoly") return unipoly().str(variable);
    if (kind == "bipoly") return bipoly().str();
    return value;
}

nlohmann::json to_json(const ResultRecord& record) {
    nlohmann::json j{{"invariant", record.invariant},
                     {"a", record.a},
                     {"b", record.b},
                     {"n", record.n},
                     {"variable", record.variable},
                     {"kind", record.kind},
                     {"ground", record.ground},
                     {"rank", record.rank},
                     {"runtime_ms", record.runtime_ms},
                     {"tool_version", record.tool_version}};
    if (record.kind == "unipoly") j["coefficients"] = record.coefficients;
    if (record.kind == "bipoly") {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [i, x, c] : record.terms) terms.push_back({i, x, c});
        j["terms"] = std::move(terms);
    }
    if (record.kind == "rational") j["value"] = record.value;
    return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.invariant = j.at("invariant").get<std::string>();
    r.a = j.at("a").get<long>();
    r.b = j.at("b").get<long>();
    r.n = j.at("n").get<long>();
    r.variable = j.at("variable").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.ground = j.at("ground").get<long>();
    r.rank = j.at("rank").get<long>();
    r.runtime_ms = j.at("runtime_ms").get<long>();
    r.tool_version = j.at("tool_version").get<std::string>();
    if (r.kind == "unipoly")
        r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    if (r.kind == "bipoly")
        for (const auto& t : j.at("terms"))
            r.terms.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(),
                                 t.at(2).get<std::string>());
    if (r.kind == "rational") r.value = j.at("value").get<std::string>();
    return r;
}

}  // namespace catval
