#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace suned::cli {

struct SelftestOptions {
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    /// Test fixture: emulates a broken sign convention by flipping one
    /// off-diagonal matrix entry before the structural checks run. Never set
    /// outside tests of the selftest itself.
    bool corrupt_sign = false;
};

struct SelftestResult {
    std::size_t checks_passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Exhaustive small-instance invariant suite over every module.
SelftestResult run_selftest_suite(const SelftestOptions& opts,
                                  std::ostream& log);

}  // namespace suned::cli
