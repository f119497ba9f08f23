#pragma once

// Exact nonnegative rationals, prime streams and the number-theoretic
// primitives (valuations, totient, denominator supports) used by every other
// module.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace pm {

using Integer = mpz_class;

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

/// Largest bound the shared sieve will enumerate; requests above it throw
/// ResourceError instead of degrading.
inline constexpr std::uint64_t kSieveCap = 10'000'000;

/// Nonnegative rational in lowest terms; zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Integer num, Integer den = 1);
    Rat(long num, long den = 1) : Rat(Integer(num), Integer(den)) {}
    Rat(int num, int den = 1) : Rat(Integer(num), Integer(den)) {}

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// floor(num/den).
    Integer floor() const;
    double to_double() const;

    /// "a/b", or "a" when the denominator is one.
    std::string to_string() const;

    Rat& operator+=(const Rat& other);
    Rat& operator*=(const Rat& other);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    /// Throws ArgumentError if b > a (the result would leave the nonnegatives).
    friend Rat operator-(const Rat& a, const Rat& b);
    /// Throws ArgumentError if b is zero.
    friend Rat operator/(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.to_string();
    }

private:
    Integer num_;
    Integer den_;
};

Rat rat_make(const Integer& num, const Integer& den);
Rat pow(const Rat& base, unsigned long exponent);
Rat operator*(const Integer& k, const Rat& r);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Parses "a/b" or "a" (ASCII digits only). Throws ParseError.
Rat parse_rat(std::string_view text, std::size_t offset = 0);

struct AllPrimes {
    friend bool operator==(const AllPrimes&, const AllPrimes&) = default;
};

/// Primes p with p = residue (mod modulus).
struct ArithmeticProgression {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
    friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

struct ExplicitPrimes {
    std::vector<std::uint64_t> primes;
    friend bool operator==(const ExplicitPrimes&, const ExplicitPrimes&) = default;
};

/// A lazily enumerated set of primes. Every enumeration takes an explicit
/// bound or count; nothing iterates the stream unboundedly.
class PrimeStream {
public:
    using Kind = std::variant<AllPrimes, ArithmeticProgression, ExplicitPrimes>;

    static PrimeStream all(std::optional<std::uint64_t> limit = std::nullopt);
    /// Requires gcd(residue, modulus) = 1 and modulus > 0.
    static PrimeStream progression(std::uint64_t residue, std::uint64_t modulus,
                                   std::optional<std::uint64_t> limit = std::nullopt);
    /// Requires a strictly increasing list of primes.
    static PrimeStream explicit_list(std::vector<std::uint64_t> primes,
                                     std::optional<std::uint64_t> limit = std::nullopt);

    const Kind& kind() const noexcept { return kind_; }
    const std::optional<std::uint64_t>& limit() const noexcept { return limit_; }

    bool is_finite() const noexcept;
    /// Membership for a prime q (q is not re-checked for primality).
    bool contains_prime(const Integer& q) const;

    /// The first `count` primes in increasing order. Throws ResourceError when
    /// the stream has fewer, or they lie beyond the sieve cap.
    std::vector<std::uint64_t> first(std::size_t count) const;
    /// Up to `count` primes; fewer only when a finite stream runs out.
    std::vector<std::uint64_t> take(std::size_t count) const;

    /// 1-based position of the prime q inside the stream.
    std::size_t index_of(std::uint64_t q) const;

    friend bool operator==(const PrimeStream&, const PrimeStream&) = default;

private:
    PrimeStream(Kind kind, std::optional<std::uint64_t> limit)
        : kind_(std::move(kind)), limit_(limit) {}

    Kind kind_;
    std::optional<std::uint64_t> limit_;
};

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// All primes <= bound from the shared sieve cache. bound <= kSieveCap.
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

/// Sorted primes <= bound that belong to the stream. bound >= 2.
std::vector<std::uint64_t> primes_up_to(const PrimeStream& stream, std::uint64_t bound);

/// v_p(x) = v_p(num) - v_p(den); x > 0, p prime.
long padic_val(const Integer& p, const Rat& x);
long padic_val(const Integer& p, const Integer& n);

std::uint64_t euler_totient(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, increasing. Trial division
/// up to the sieve cap; throws ResourceError if a composite cofactor remains.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// D_P(x): primes of P dividing d(x); empty for x = 0.
std::set<Integer> dp_support(const Rat& x, const PrimeStream& primes);
/// D_P(R): union of D_P(r) over r in R.
std::set<Integer> dp_support(std::span<const Rat> values, const PrimeStream& primes);

/// lcm of d(r) over a nonempty list.
Integer lcm_denominators(std::span<const Rat> values);

std::string to_string(const PrimeStream& stream);

}  // namespace pm
