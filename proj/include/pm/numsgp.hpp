#pragma once

// Finitely generated submonoids of the nonnegative integers and the scaling
// bridge from finite sets of rationals. Every finite-truncation decision in
// the engine ends up in represent_in_order().

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pm/exactnum.hpp"

namespace pm {

/// Membership tables are built only up to this (content-reduced) target.
inline constexpr std::uint64_t kTableCap = 10'000'000;

/// Node-count limit for exhaustive searches. One node is one table cell.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t nodes) : remaining_(nodes) {}

    /// Throws BudgetExhausted once the limit is crossed.
    void consume(std::uint64_t nodes);
    std::uint64_t remaining() const noexcept { return remaining_; }

private:
    std::uint64_t remaining_;
};

class NumericalSemigroup {
public:
    /// Sorted, deduplicated input generators.
    const std::vector<Integer>& generators() const noexcept { return generators_; }
    /// gcd of the generators.
    const Integer& content() const noexcept { return content_; }
    const std::vector<Integer>& reduced_generators() const noexcept { return reduced_; }
    const Integer& multiplicity() const noexcept { return reduced_.front(); }
    /// lcm of denominators when built from rationals.
    const std::optional<Integer>& scale() const noexcept { return scale_; }

    /// The isomorphic copy generated by reduced_generators().
    NumericalSemigroup reduced() const;

    friend NumericalSemigroup ns_from_integers(std::vector<Integer> generators);
    friend NumericalSemigroup ns_from_rationals(std::span<const Rat> generators);

private:
    NumericalSemigroup() = default;

    std::vector<Integer> generators_;
    Integer content_;
    std::vector<Integer> reduced_;
    std::optional<Integer> scale_;
};

/// Generator -> multiplicity.
using Representation = std::map<Integer, Integer>;

struct Containment {
    bool member = false;
    /// Present iff member; re-sums to the queried target.
    std::optional<Representation> representation;
};

/// Throws ArgumentError on an empty list or a nonpositive entry.
NumericalSemigroup ns_from_integers(std::vector<Integer> generators);
/// Scales by lcm of denominators; entries must be positive.
NumericalSemigroup ns_from_rationals(std::span<const Rat> generators);

/// scale * x when the semigroup was built from rationals and that product is
/// integral; nullopt means x lies outside the rational monoid.
std::optional<Integer> scaled_target(const NumericalSemigroup& s, const Rat& x);

/// Decides t in <generators>. The representation is the lexicographically
/// greatest multiplicity vector over generators sorted largest first.
Containment ns_contains(const NumericalSemigroup& s, const Integer& t,
                        SearchBudget* budget = nullptr);

/// Core decision routine: multiplicities (aligned with `generators`) summing
/// to t, lexicographically greatest in the given priority order, or nullopt.
/// Generators larger than t never take part, and the rest are reduced by
/// their gcd before a table is built. Targets whose reduced value exceeds
/// kTableCap are decided through the Apery set of the smallest usable
/// generator; those representations are valid but not lexicographically
/// greedy.
std::optional<std::vector<Integer>> represent_in_order(std::span<const Integer> generators,
                                                       const Integer& t,
                                                       SearchBudget* budget = nullptr);

/// Least element of each residue class mod m. Requires content 1 and m in S.
std::vector<Integer> ns_apery(const NumericalSemigroup& s, const Integer& m);

/// Frobenius number (-1 for <1>); nullopt when the content exceeds one and
/// the complement is infinite.
std::optional<Integer> ns_frobenius(const NumericalSemigroup& s);

/// Generators not representable by the others, ascending.
std::vector<Integer> ns_minimal_generators(const NumericalSemigroup& s);

/// Number of gaps. Requires content 1.
Integer ns_genus(const NumericalSemigroup& s);

}  // namespace pm
