#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tpr {

/// One published value replayed against the library.
struct FixtureResult {
    std::string id;
    std::string provenance;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Stable fixture identifiers, in run order.
std::vector<std::string> fixture_ids();

/// Runs one fixture; throws Error for an unknown id.
FixtureResult run_fixture(std::string_view id);

std::vector<FixtureResult> run_all_fixtures();

} // namespace tpr
