#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace formrank::verify {

struct VerifyOptions {
    std::string suite = "paper";  // "paper" or "smoke"
    std::uint64_t budget = 1ull << 24;
    unsigned threads = 1;
};

struct CheckResult {
    std::string name;
    unsigned criterion = 0;  // acceptance criterion this check belongs to
    bool pass = false;
    std::string details;
};

struct Summary {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

bool valid_suite(const std::string& name);

/// Runs the named suite; results are deterministic and independent of the
/// worker-thread count.
Summary run_suite(const VerifyOptions& opts);

/// Canonical machine-readable summary (no timings, no thread count).
std::string summary_text(const Summary& summary, const VerifyOptions& opts);

}  // namespace formrank::verify
