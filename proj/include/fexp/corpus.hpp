#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fexp {

struct CriterionResult {
    std::string id;      // "1" .. "10", with letters for sub-criteria
    std::string title;
    bool pass = false;
    /// Stated criterion that cannot hold as written; reported but excluded
    /// from the overall verdict.
    bool known_unattainable = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0 when no runtime target applies
};

struct CorpusConfig {
    std::uint64_t seed = 20240601;
    int rational_samples = 200;  // per rational-periodicity setting
};

/// Runs the acceptance criteria in order; every result carries its own
/// pinned tolerances in `detail`.
std::vector<CriterionResult> run_acceptance(const CorpusConfig& config = {});

/// One line per criterion: "[PASS] id title: detail (t s, limit L s)".
std::string acceptance_text(const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results, const CorpusConfig& config);

/// True iff every criterion passes except the known-unattainable ones.
bool acceptance_ok(const std::vector<CriterionResult>& results);

} // namespace fexp
