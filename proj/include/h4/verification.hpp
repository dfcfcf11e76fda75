#pragma once

// Acceptance checks against the published values in reference_data.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace h4::verify {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool passed = true;
    bool flagged = false;  // published value disagrees; informational, not a failure
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
    std::size_t flags() const;
};

inline constexpr int kCriterionCount = 11;

std::string criterion_title(int id);

/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// Timings are left out so reports are reproducible.
nlohmann::json to_json(const CriterionResult& result);
nlohmann::json report_json(const std::vector<CriterionResult>& results);

/// One summary line; with `details`, one line per check below it, otherwise
/// only failed and flagged checks.
void print_result(std::ostream& os, const CriterionResult& result, bool details);

}  // namespace h4::verify
