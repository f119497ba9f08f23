#pragma once

// Property suites behind `pm verify`. Each suite is deterministic for a
// given seed and reports per-check counts plus the first counterexample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pm/exactnum.hpp"

namespace pm {

struct VerifyOptions {
    std::uint64_t seed = 20240501;
    std::optional<std::size_t> depth;
    std::optional<Rat> ratio;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> count;  // --n: sequence length
    std::uint64_t modulus = 4;         // eq5.3 progression n
    std::uint64_t residue = 1;         // eq5.3 progression m
    std::uint64_t x = 1'000'000;       // eq5.3 largest checkpoint
};

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::optional<std::string> counterexample;
    std::vector<std::string> details;

    bool pass() const noexcept { return passed == total && !counterexample; }
};

struct SuiteResult {
    std::string tag;
    std::vector<CheckResult> checks;

    bool pass() const noexcept;
};

/// Known suite tags in run order, without "all".
const std::vector<std::string>& verify_tags();

bool is_verify_tag(const std::string& tag);

/// Throws ArgumentError on an unknown tag. "all" is not a suite; run each
/// entry of verify_tags() instead.
SuiteResult run_suite(const std::string& tag, const VerifyOptions& options = {});

}  // namespace pm
