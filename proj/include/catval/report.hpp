#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "catval/bipoly.hpp"
#include "catval/unipoly.hpp"

namespace catval {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verified instance: pass iff expected and actual agree exactly.
struct VerifyCase {
    std::string instance;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::optional<std::uint64_t> seed;
    std::vector<VerifyCase> cases;
    long runtime_ms = 0;

    bool pass() const;
    long failures() const;
    void add(std::string instance, std::string expected, std::string actual);
};

nlohmann::json to_json(const VerifyReport& report);
VerifyReport report_from_json(const nlohmann::json& j);

/// Self-describing result of one invariant computation, the unit of the CLI
/// output and the on-disk cache. Coefficients are decimal strings so values
/// of any size round-trip exactly.
struct ResultRecord {
    std::string invariant;
    long a = 0, b = 0, n = 0;
    std::string variable;
    // Exactly one of the three payloads is set, per `kind`.
    std::string kind;  // "unipoly" | "bipoly" | "rational"
    std::vector<std::string> coefficients;            // ascending degree
    std::vector<std::tuple<int, int, std::string>> terms;  // (i, j, coeff)
    std::string value;                                // rational
    long ground = 0;
    long rank = 0;
    long runtime_ms = 0;
    std::string tool_version = kToolVersion;

    static ResultRecord of_unipoly(const UniPoly& p);
    static ResultRecord of_bipoly(const BiPoly& p);
    static ResultRecord of_rational(const Rational& v);

    UniPoly unipoly() const;
    BiPoly bipoly() const;
    Rational rational() const;

    /// Canonical single-line text rendering of the payload.
    std::string text() const;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

nlohmann::json to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

}  // namespace catval
