#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace symchow {

/// Structured result of one CLI command. The JSON rendering is the
/// stability contract: identical invocations produce byte-identical
/// output, so timing is reported only in the human text rendering.
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    nlohmann::ordered_json payload;
    std::string status; ///< "pass", "fail" or "error"
    double wall_seconds = 0.0;

    int exit_code() const;
    std::string to_json_string() const;
    std::string to_text() const;
};

/// Presentation report for --space in {siegel, levi, full}.
Report cmd_present(int g, const std::string& space);

/// Weights and Chern classes for --bundle in {tangent, normal, hodge}.
Report cmd_chern(int g, const std::string& bundle);

/// Verification driver for --which in
/// {theorem, chern-vanishing, symm-lemma, kernel, all}.
Report cmd_verify(int g, const std::string& which);

/// Table of (g, dim G/P_I, a_{J,g}, sign check) for g = 2..gmax.
Report cmd_table(int gmax);

} // namespace symchow
