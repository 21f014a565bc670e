#include <doctest.h>

#include "qherm/checks.hpp"

using namespace qherm;

TEST_CASE("report serialization") {
    CHECK(report_json({}) == "[]");

    CheckRecord r;
    r.criterion = 1;
    r.name = "mu";
    r.anchor = "density.self";
    r.status = CheckStatus::Pass;
    r.expected = to_string(ExactRational(32, 27));
    r.actual = r.expected;
    r.seconds = 1.5;
    auto j = nlohmann::ordered_json::parse(report_json({r}));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["expected"] == "32/27");
    CHECK(j[0]["actual"].is_string());
    CHECK(j[0]["runtime"].is_null());
    CHECK(record_json(r, true)["runtime"] == 1.5);
    // key order is fixed
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"name", "anchor", "status", "expected", "actual", "runtime"});
}

TEST_CASE("criterion summaries") {
    std::vector<CheckRecord> recs(4);
    recs[0].criterion = 2;
    recs[0].status = CheckStatus::Pass;
    recs[1].criterion = 2;
    recs[1].status = CheckStatus::Fail;
    recs[1].name = "bad";
    recs[2].criterion = 5;
    recs[2].status = CheckStatus::Skipped;
    recs[3].criterion = 8;
    recs[3].status = CheckStatus::Pass;
    auto s = summarize(recs);
    REQUIRE(s.size() == 3);
    CHECK(s[0].status == CheckStatus::Fail);
    CHECK(s[0].notes == std::vector<std::string>{"bad"});
    CHECK(s[1].status == CheckStatus::Skipped);
    CHECK(s[2].status == CheckStatus::Pass);
    CHECK(parse_tier("fast") == Tier::Fast);
    CHECK_THROWS(parse_tier("deep"));
}

TEST_CASE("fast tier is reproducible") {
    SuiteConfig cfg;
    cfg.tier = Tier::Fast;
    auto a = run_suite(cfg), b = run_suite(cfg);
    CHECK(report_json(a) == report_json(b));
}
