#pragma once

// The verification suite shared by `qherm verify` and the acceptance
// binary. Each record belongs to one numbered criterion and carries a short
// anchor naming the identity it exercises.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qherm/density.hpp"

namespace qherm {

enum class CheckStatus { Pass, Fail, Skipped };
const char* status_name(CheckStatus s);

struct CheckRecord {
    int criterion = 0;
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::Fail;
    std::string expected;
    std::string actual;
    double seconds = 0;
    std::string note;
};

enum class Tier { Fast, Counting, All };
Tier parse_tier(const std::string& s);  // "fast", "counting", "all"

struct SuiteConfig {
    Tier tier = Tier::All;
    i64 p = 3;  // prime for the checks stated at p = 3
    CountOptions count;
};

/// Records for criteria 2-4 and 6-9 (fast) and 1, 5, 10 (counting).
std::vector<CheckRecord> run_suite(const SuiteConfig& cfg);

/// Criteria in the order they were run, with pass iff every record passed;
/// a criterion with a skipped record and no failure reports skipped.
struct CriterionSummary {
    int criterion = 0;
    CheckStatus status = CheckStatus::Pass;
    int passed = 0, failed = 0, skipped = 0;
    std::vector<std::string> notes;
};
std::vector<CriterionSummary> summarize(const std::vector<CheckRecord>& recs);

/// {name, anchor, status, expected, actual, runtime[, note]}. runtime is null
/// unless timing is set, so reports are byte-reproducible by default.
nlohmann::ordered_json record_json(const CheckRecord& r, bool timing = false);
/// Pretty-printed array; an empty report is "[]".
std::string report_json(const std::vector<CheckRecord>& recs, bool timing = false);

}  // namespace qherm
