#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace c32::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Outcome of one command. `pass` drives the exit code.
struct RunReport {
    std::string command;
    bool pass = false;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    std::vector<std::string> lines;  ///< human-readable body
    double timing_ms = 0.0;

    [[nodiscard]] nlohmann::ordered_json to_json(bool with_timing = true) const;
    [[nodiscard]] std::string to_text() const;
};

/// Malformed option values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunReport verify_relation(bool generic_x, bool corrupt_xi4);
RunReport verify_expansions();
RunReport ch_identity();
/// `degree` is "d1,d2".
RunReport hwv(const std::string& degree);
RunReport solve_xi(bool discover);
RunReport hilbert(unsigned max_degree);
/// `space` is one of U2, U3, U4, U6, S. `degree` is empty, "k" (a total-degree
/// slice) or "a,b" (a single multiplicity).
RunReport decompose(const std::string& space, const std::string& degree);

/// Parses "a,b" into two unsigned integers; throws UsageError.
std::pair<unsigned, unsigned> parse_pair(const std::string& text);

/// Full command-line entry point: prints the report to `out`, errors to `err`,
/// returns the exit code (0 pass, 1 mathematical failure, 2 usage error).
int run(int argc, const char* const* argv, std::string& out, std::string& err);

}  // namespace c32::cli
