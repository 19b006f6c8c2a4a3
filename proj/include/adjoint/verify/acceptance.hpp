#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace adjoint::verify {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
    double limit_seconds; // 0 when the criterion has no runtime bound
};

/// Runs acceptance criteria 1-8. Random suites draw from mt19937_64(seed).
/// `progress` (optional) is called once per finished criterion.
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& progress = {});

/// One line: "[PASS] 1 gs-certificate (0.01 s): ...".
std::string format_result(const CriterionResult& r);

} // namespace adjoint::verify
