#include "tpriordan/fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace tpr;

TEST_SUITE("fixtures") {

TEST_CASE("ids are unique and runnable") {
    const auto ids = fixture_ids();
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK_THROWS_AS(run_fixture("no_such_fixture"), std::exception);
    const auto r = run_fixture("ex_gf_not_TP_minor");
    CHECK(r.expected == "-1");
    CHECK(r.computed == "-1");
    CHECK(r.pass);
    CHECK(run_fixture("alpha_minor_108").computed == "-108");
}

TEST_CASE("every reference value reproduces") {
    for (const auto& r : run_all_fixtures()) {
        INFO(r.id, ": expected ", r.expected, ", computed ", r.computed);
        CHECK(r.pass);
    }
}

}
