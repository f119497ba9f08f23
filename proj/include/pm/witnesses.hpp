#pragma once

// Concrete submonoids built from the constructive arguments, each checked
// against the engine before being reported as verified.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pm/descriptors.hpp"
#include "pm/exactnum.hpp"

namespace pm {

namespace witness {
struct Verified {};
struct FailedAt {
    std::size_t index = 0;  // 1-based position in generators
    std::string detail;
};
}  // namespace witness

struct WitnessReport {
    std::string construction;
    std::vector<Rat> generators;
    std::vector<Rat> claimed_atoms;
    std::size_t verified_depth = 0;
    std::variant<witness::Verified, witness::FailedAt> verdict;
    std::string provenance;
    std::vector<std::string> notes;

    bool verified() const noexcept { return std::holds_alternative<witness::Verified>(verdict); }
};

/// Verification depth used when none is given: N + 4.
std::size_t default_witness_depth(std::size_t n);

/// a_1..a_N over P, every one an atom.
WitnessReport witness_partial_sums(const PrimeStream& primes, std::size_t n,
                                   std::optional<std::size_t> depth = std::nullopt);

/// A_1, B_1, ..., A_N, B_N; the A part accumulates at 0 and the B part at 1.
WitnessReport witness_example_ab(std::size_t n, std::optional<std::size_t> depth = std::nullopt);

/// Strictly increasing r_1..r_N where each r_{k+1} carries a denominator that
/// does not divide the denominators of <r_1..r_k>. Ties go to the smallest new
/// denominator, then to the smallest multiplier coprime to it.
WitnessReport witness_infinite_atoms(const MonoidDescriptor& d, std::size_t n,
                                     std::optional<std::size_t> depth = std::nullopt);

/// Limit of the atom sequence for the weakly increasing families that admit
/// the two- and three-fold construction; nullopt otherwise.
std::optional<Rat> accumulation_limit(const MonoidDescriptor& d);

/// b_n = 2a and c_n = 3a for the n-th atom a above 11l/12, so that
/// |b_n - 2l| < l/4 and |c_n - 3l| < l/4. Order: b_1, c_1, b_2, c_2, ...
WitnessReport witness_non_monotone_submonoid(const MonoidDescriptor& d, std::size_t n);

/// r + ... + r^n for n <= N, 0 < r < 1.
WitnessReport witness_geo_psums(const Rat& r, std::size_t n, std::optional<std::size_t> depth = std::nullopt);

/// s_1..s_N for r = a/b with a, b > 1.
WitnessReport witness_unbounded_geo(const Rat& r, std::size_t n, std::optional<std::size_t> depth = std::nullopt);

}  // namespace pm
