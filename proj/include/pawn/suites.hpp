#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pawn {

// Outcome of one randomized cross-validation suite.
struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::optional<std::string> counterexample; // serialized input of the first failure
    bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
std::size_t default_suite_count(std::string_view name);
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t count);

// Seed of case i of a suite run, so a failing case can be replayed alone.
std::uint64_t case_seed(std::uint64_t seed, std::size_t i);

} // namespace pawn
