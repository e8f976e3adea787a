#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qwa {

struct SelfTestOptions {
    std::uint64_t seed = 20250801;
    // Multiplies the randomized sample counts; 1.0 runs the full acceptance
    // volumes, smaller values give a quick self-test.
    double scale = 1.0;
};

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double seconds;
    double budget_seconds;
    std::string detail;  // nonempty on failure
};

std::vector<CriterionResult> run_acceptance(const SelfTestOptions& opts);

// Prints one PASS/FAIL line per criterion; returns true when all passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace qwa
