// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qherm/checks.hpp"

using namespace qherm;

int main(int argc, char** argv) {
    SuiteConfig cfg;
    if (argc > 1) cfg.tier = parse_tier(argv[1]);
    if (const char* b = std::getenv("QHERM_BUDGET")) cfg.count.budget = std::stoull(b);
    auto recs = run_suite(cfg);
    bool ok = true;
    for (const auto& s : summarize(recs)) {
        std::string line = "criterion " + std::to_string(s.criterion) + ": ";
        line += s.status == CheckStatus::Pass ? "PASS" : s.status == CheckStatus::Fail ? "FAIL" : "SKIPPED";
        line += " (" + std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
                std::to_string(s.skipped) + " skipped)";
        for (const auto& n : s.notes) line += " | " + n;
        std::puts(line.c_str());
        ok = ok && s.status != CheckStatus::Fail;
    }
    return ok ? 0 : 1;
}
