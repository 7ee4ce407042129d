#include <catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include <sydlab/suites.hpp>

using namespace sydlab;

namespace {

RunConfig small()
{
    RunConfig c;
    c.truncation_order1 = 20;
    c.truncation_order2 = 8;
    c.weyl_rank_bound = 4;
    c.atlas_rank_bound = 6;
    return c;
}

} // namespace

TEST_CASE("suite names", "[suites]")
{
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "appendixC") != names.end());
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
}

TEST_CASE("appendix, counting and atlas suites pass at small bounds", "[suites]")
{
    for (const std::string name : {"appendixC", "counting", "atlas", "weyl"}) {
        auto results = run_suite(name, small());
        CHECK_FALSE(results.empty());
        for (const auto& r : results) {
            INFO(r.suite << "/" << r.check << ": " << r.detail);
            CHECK(r.suite == name);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("literal calibration is reported as failing", "[suites]")
{
    auto results = run_suite("richardson", small());
    bool seen = false;
    for (const auto& r : results)
        if (r.check == "calibration_literal_unique") {
            seen = true;
            CHECK_FALSE(r.passed);
        } else {
            INFO(r.check << ": " << r.detail);
            CHECK(r.passed);
        }
    CHECK(seen);
}

TEST_CASE("bad input", "[suites]")
{
    CHECK_THROWS_AS(run_suite("nope", small()), std::invalid_argument);
    RunConfig c;
    c.weyl_rank_bound = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
