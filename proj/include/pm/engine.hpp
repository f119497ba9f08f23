#pragma once

// Decision procedures over descriptor families: membership with certificates,
// atom sets, structural classification and substantiality of prime sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pm/descriptors.hpp"
#include "pm/exactnum.hpp"

namespace pm {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// One summand of a membership certificate: multiplicity copies of the
/// generator at a 1-based index of the family enumeration.
struct Term {
    std::size_t index = 0;
    Rat generator;
    Integer multiplicity;
    friend bool operator==(const Term&, const Term&) = default;
};

namespace verdict {

struct In {
    std::vector<Term> terms;  // increasing index, positive multiplicities
    std::size_t depth = 0;    // every index is <= depth
};

struct BelowMinimum {};
struct ValuationObstruction {
    Integer prime;
};
struct DenominatorObstruction {};
struct ExhaustiveRefutation {};

using Refutation =
    std::variant<BelowMinimum, ValuationObstruction, DenominatorObstruction, ExhaustiveRefutation>;

/// Sound for the whole monoid, never just for a truncation.
struct NotIn {
    Refutation reason;
};

struct UnknownAtDepth {
    std::size_t depth = 0;
};

}  // namespace verdict

struct MembershipVerdict {
    std::variant<verdict::In, verdict::NotIn, verdict::UnknownAtDepth> status;

    bool is_in() const noexcept { return std::holds_alternative<verdict::In>(status); }
    bool is_not_in() const noexcept { return std::holds_alternative<verdict::NotIn>(status); }
    bool is_unknown() const noexcept { return std::holds_alternative<verdict::UnknownAtDepth>(status); }
};

/// Sum of multiplicity * generator over the terms.
Rat resum(std::span<const Term> terms);

/// Decides x in <D>. Exact for Finite, Primary, antimatter and integral
/// Geometric, the strongly increasing families, ExampleAB and
/// PrimeFractions(1). Elsewhere a negative answer is UnknownAtDepth unless a
/// denominator or valuation obstruction refutes membership outright.
/// `node_budget` caps table work per call; exhaustion yields UnknownAtDepth.
MembershipVerdict member(const MonoidDescriptor& d, const Rat& x,
                         Truncation depth = Truncation(kDefaultDepth),
                         std::uint64_t node_budget = kDefaultBudget);

namespace exactness {
struct ClosedForm {
    std::string source;
};
struct ExactByIncreasingFilter {};
struct TruncatedAtDepth {
    std::size_t depth = 0;
};
}  // namespace exactness

struct AtomReport {
    std::vector<Rat> atoms;
    std::variant<exactness::ClosedForm, exactness::ExactByIncreasingFilter, exactness::TruncatedAtDepth>
        exactness;
    bool antimatter = false;
};

AtomReport atoms(const MonoidDescriptor& d, Truncation depth = Truncation(kDefaultDepth));

/// Keeps r_n when r_n is not in <r_1, ..., r_{n-1}>. Input must be strictly
/// increasing; over such a sequence the result is exactly the atom set.
std::vector<Rat> increasing_filter(std::span<const Rat> increasing);

/// Elements of R not representable by the others, ascending. Treats R as a
/// set. Throws ResourceError above kBruteForceLimit distinct elements.
std::vector<Rat> brute_force_atoms(std::span<const Rat> values);
inline constexpr std::size_t kBruteForceLimit = 16;

enum class MonotoneClass {
    StronglyIncreasing,
    WeaklyIncreasing,
    StronglyDecreasing,
    WeaklyDecreasing,
    NotMonotone,
    Both,  // finitely generated
};

enum class Atomicity { Atomic, Antimatter, HereditarilyAtomic };

struct Citation {
    std::string flag;
    std::string source;
};

struct StructureReport {
    bool is_finitely_generated = false;
    bool iso_to_numerical_semigroup = false;
    MonotoneClass monotone_class = MonotoneClass::NotMonotone;
    bool bounded = false;
    bool strongly_bounded = false;
    Atomicity atomicity = Atomicity::Atomic;
    std::vector<Citation> citations;
    std::vector<std::string> notes;
};

StructureReport classify(const MonoidDescriptor& d);

std::string to_string(MonotoneClass c);
std::string to_string(Atomicity a);

enum class Substantiality { Substantial, Insubstantial };

struct SubstantialityReport {
    Substantiality verdict = Substantiality::Insubstantial;
    /// (x, S(x)) with S(x) the exact sum of 1/p over p in P, p <= x.
    std::vector<std::pair<std::uint64_t, Rat>> partial_sums;
    /// (x, S(x) - log log x / phi(n)); approximate, progression streams only.
    std::vector<std::pair<std::uint64_t, double>> mertens_offsets;
    /// Full reciprocal sum when P is finite.
    std::optional<Rat> total;
};

inline const std::vector<std::uint64_t> kDefaultCheckpoints{10'000, 100'000, 1'000'000};

/// Checkpoints must be increasing; ones that add no new prime are dropped so
/// the partial sums stay strictly increasing.
SubstantialityReport is_substantial(const PrimeStream& primes,
                                    std::span<const std::uint64_t> checkpoints = kDefaultCheckpoints);

/// Exact sum of 1/p over the given distinct primes.
Rat reciprocal_sum(std::span<const std::uint64_t> primes);

}  // namespace pm
