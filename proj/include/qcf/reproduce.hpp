#pragma once

// Scripted reproductions of the headline results, as machine-checkable claims.

#include <string>
#include <vector>

#include <json.hpp>

#include "qcf/rational.hpp"

namespace qcf {

struct Claim {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass;
};

struct ReproductionReport {
    std::string name;
    std::vector<Claim> claims;

    bool passed() const;
    void exact(std::string description, const Rational& expected, const Rational& computed);
    void within(std::string description, double expected, double computed, double tolerance);
    void check(std::string description, std::string expected, std::string computed, bool pass);
};

nlohmann::json to_json(const ReproductionReport& report);

/// Twelve significant digits.
std::string format_double(double value);

/// One of: binary, appendix_b, model_ab, appendix_e, appendix_e_general, toy.
/// std::invalid_argument for anything else.
ReproductionReport reproduce(const std::string& example);

const std::vector<std::string>& reproduction_names();

}  // namespace qcf
