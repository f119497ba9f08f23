#pragma once

// Finite descriptions of the Puiseux monoid families the toolkit knows about,
// with truncated generator enumeration and a text grammar.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pm/exactnum.hpp"

namespace pm {

namespace family {

/// <r_1, ..., r_k>, generators in the order given.
struct Finite {
    std::vector<Rat> generators;
    friend bool operator==(const Finite&, const Finite&) = default;
};

/// <r^n | n >= 1>.
struct Geometric {
    Rat ratio;
    friend bool operator==(const Geometric&, const Geometric&) = default;
};

/// <1/p | p in P>.
struct Primary {
    PrimeStream primes;
    friend bool operator==(const Primary&, const Primary&) = default;
};

/// <a_n>, a_n = 1/p_1 + ... + 1/p_n over the stream.
struct PartialSumsPrimary {
    PrimeStream primes;
    friend bool operator==(const PartialSumsPrimary&, const PartialSumsPrimary&) = default;
};

/// <1/p_{2n}> together with <(p_{2n-1} - 1)/p_{2n-1}>, enumerated interleaved
/// as A_1, B_1, A_2, B_2, ...
struct ExampleAB {
    friend bool operator==(const ExampleAB&, const ExampleAB&) = default;
};

/// (p - 1)/p for power 1, (p^2 - 1)/p for power 2, over all primes.
struct PrimeFractions {
    int power = 1;
    friend bool operator==(const PrimeFractions&, const PrimeFractions&) = default;
};

/// <r + r^2 + ... + r^n | n >= 1>.
struct GeometricPartialSums {
    Rat ratio;
    friend bool operator==(const GeometricPartialSums&, const GeometricPartialSums&) = default;
};

/// <s_n>, s_n = (n b^n + 1) a^n / b^n for r = a/b with a, b > 1.
struct UnboundedGeometricWitness {
    Rat ratio;
    friend bool operator==(const UnboundedGeometricWitness&, const UnboundedGeometricWitness&) = default;
};

}  // namespace family

class MonoidDescriptor {
public:
    using Kind = std::variant<family::Finite, family::Geometric, family::Primary,
                              family::PartialSumsPrimary, family::ExampleAB, family::PrimeFractions,
                              family::GeometricPartialSums, family::UnboundedGeometricWitness>;

    /// Validates the family invariants; throws ArgumentError.
    explicit MonoidDescriptor(Kind kind);

    static MonoidDescriptor finite(std::vector<Rat> generators);
    static MonoidDescriptor geometric(Rat ratio);
    static MonoidDescriptor primary(PrimeStream primes);
    static MonoidDescriptor partial_sums_primary(PrimeStream primes);
    static MonoidDescriptor example_ab();
    static MonoidDescriptor prime_fractions(int power);
    static MonoidDescriptor geometric_partial_sums(Rat ratio);
    static MonoidDescriptor unbounded_geometric_witness(Rat ratio);

    const Kind& kind() const noexcept { return kind_; }

    template <class F>
    const F* as() const noexcept {
        return std::get_if<F>(&kind_);
    }

    friend bool operator==(const MonoidDescriptor&, const MonoidDescriptor&) = default;

private:
    Kind kind_;
};

/// Index cutoff for generator enumeration; depth >= 1.
class Truncation {
public:
    explicit Truncation(std::size_t depth);
    std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t depth_;
};

inline constexpr std::size_t kDefaultDepth = 10;

/// The first K generators in canonical index order (Finite: the whole list).
/// Families over a finite prime stream stop early when the stream runs out,
/// except PartialSumsPrimary, which throws ArgumentError.
std::vector<Rat> generators_up_to(const MonoidDescriptor& d, Truncation k);

/// Grammar tag of the family ("finite", "geometric", ...).
std::string kind_name(const MonoidDescriptor& d);

MonoidDescriptor parse_descriptor(std::string_view text);
std::string serialize_descriptor(const MonoidDescriptor& d);

/// `all` | `ap(m,n)` | `p1,p2,...`, optionally followed by `;limit=N`.
PrimeStream parse_prime_stream(std::string_view text, std::size_t offset = 0);

}  // namespace pm
