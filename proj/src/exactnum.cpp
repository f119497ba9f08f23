#include "pm/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pm/errors.hpp"

namespace pm {

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0) throw ArgumentError("rational denominator must be positive");
    if (num_ < 0) throw ArgumentError("rational numerator must be nonnegative");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rat rat_make(const Integer& num, const Integer& den) { return Rat(num, den); }

Integer Rat::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

double Rat::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

std::string Rat::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rat& Rat::operator+=(const Rat& other) {
    if (den_ == other.den_) {
        *this = Rat(num_ + other.num_, den_);
    } else {
        *this = Rat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
    }
    return *this;
}

Rat& Rat::operator*=(const Rat& other) {
    *this = Rat(num_ * other.num_, den_ * other.den_);
    return *this;
}

Rat operator-(const Rat& a, const Rat& b) {
    Integer n = a.num_ * b.den_ - b.num_ * a.den_;
    if (n < 0) throw ArgumentError("rational subtraction would go negative");
    return Rat(std::move(n), a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw ArgumentError("division by zero rational");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat pow(const Rat& base, unsigned long exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
    return Rat(std::move(n), std::move(d));
}

Rat operator*(const Integer& k, const Rat& r) { return Rat(k * r.num(), r.den()); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
}

}  // namespace

Rat parse_rat(std::string_view text, std::size_t offset) {
    std::size_t end = scan_digits(text, 0);
    if (end == 0) throw ParseError("expected digits in rational", offset);
    Integer num(std::string(text.substr(0, end)));
    Integer den(1);
    if (end < text.size()) {
        if (text[end] != '/') throw ParseError("unexpected character in rational", offset + end);
        std::size_t den_end = scan_digits(text, end + 1);
        if (den_end == end + 1) throw ParseError("expected denominator digits", offset + end + 1);
        if (den_end != text.size())
            throw ParseError("unexpected character in rational", offset + den_end);
        den = Integer(std::string(text.substr(end + 1, den_end - end - 1)));
        if (den == 0) throw ParseError("zero denominator", offset + end + 1);
    }
    return Rat(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Sieve

namespace {

std::vector<std::uint64_t> segmented_sieve(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound)));
    while (root * root > bound) --root;
    while ((root + 1) * (root + 1) <= bound) ++root;

    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr std::uint64_t kSegment = 1 << 16;
    std::vector<char> mark(kSegment);
    for (std::uint64_t low = 2; low <= bound; low += kSegment) {
        std::uint64_t high = std::min(bound, low + kSegment - 1);
        std::fill(mark.begin(), mark.end(), 1);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) mark[j - low] = 0;
        }
        for (std::uint64_t v = low; v <= high; ++v)
            if (mark[v - low]) out.push_back(v);
    }
    return out;
}

// Shared, grow-only cache. Published vectors are never mutated, so readers
// holding a snapshot see the same result a fresh computation would produce.
class SieveCache {
public:
    std::shared_ptr<const std::vector<std::uint64_t>> snapshot(std::uint64_t bound) {
        if (bound > kSieveCap)
            throw ResourceError("prime enumeration beyond sieve cap of " + std::to_string(kSieveCap));
        std::lock_guard lock(mutex_);
        if (!primes_ || covered_ < bound) {
            std::uint64_t target = std::min(kSieveCap, std::max<std::uint64_t>(bound, 2 * covered_));
            target = std::max<std::uint64_t>(target, 1024);
            primes_ = std::make_shared<const std::vector<std::uint64_t>>(segmented_sieve(target));
            covered_ = target;
        }
        return primes_;
    }

private:
    std::mutex mutex_;
    std::shared_ptr<const std::vector<std::uint64_t>> primes_;
    std::uint64_t covered_ = 0;
};

SieveCache& sieve_cache() {
    static SieveCache cache;
    return cache;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
    auto primes = sieve_cache().snapshot(bound);
    auto end = std::upper_bound(primes->begin(), primes->end(), bound);
    return {primes->begin(), end};
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(to_integer(n)); }

// ---------------------------------------------------------------------------
// PrimeStream

PrimeStream PrimeStream::all(std::optional<std::uint64_t> limit) {
    if (limit && *limit == 0) throw ArgumentError("prime stream limit must be positive");
    return PrimeStream(AllPrimes{}, limit);
}

PrimeStream PrimeStream::progression(std::uint64_t residue, std::uint64_t modulus,
                                     std::optional<std::uint64_t> limit) {
    if (modulus == 0) throw ArgumentError("progression modulus must be positive");
    if (std::gcd(residue, modulus) != 1)
        throw ArgumentError("progression residue and modulus must be coprime");
    if (limit && *limit == 0) throw ArgumentError("prime stream limit must be positive");
    return PrimeStream(ArithmeticProgression{residue, modulus}, limit);
}

PrimeStream PrimeStream::explicit_list(std::vector<std::uint64_t> primes,
                                       std::optional<std::uint64_t> limit) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw ArgumentError("explicit prime list entry " + std::to_string(primes[i]) +
                                " is not prime");
        if (i > 0 && primes[i] <= primes[i - 1])
            throw ArgumentError("explicit prime list must be strictly increasing");
    }
    if (limit && *limit == 0) throw ArgumentError("prime stream limit must be positive");
    return PrimeStream(ExplicitPrimes{std::move(primes)}, limit);
}

bool PrimeStream::is_finite() const noexcept {
    return limit_.has_value() || std::holds_alternative<ExplicitPrimes>(kind_);
}

bool PrimeStream::contains_prime(const Integer& q) const {
    if (limit_ && q > to_integer(*limit_)) return false;
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AllPrimes>) {
                return true;
            } else if constexpr (std::is_same_v<K, ArithmeticProgression>) {
                Integer r = q % to_integer(k.modulus);
                return r == to_integer(k.residue % k.modulus);
            } else {
                if (!q.fits_ulong_p()) return false;
                return std::binary_search(k.primes.begin(), k.primes.end(), q.get_ui());
            }
        },
        kind_);
}

std::vector<std::uint64_t> primes_up_to(const PrimeStream& stream, std::uint64_t bound) {
    if (bound < 2) throw ArgumentError("prime bound must be at least 2");
    if (stream.limit()) bound = std::min(bound, *stream.limit());
    if (const auto* list = std::get_if<ExplicitPrimes>(&stream.kind())) {
        auto end = std::upper_bound(list->primes.begin(), list->primes.end(), bound);
        return {list->primes.begin(), end};
    }
    std::vector<std::uint64_t> all = sieve_primes(bound);
    if (const auto* ap = std::get_if<ArithmeticProgression>(&stream.kind())) {
        std::uint64_t r = ap->residue % ap->modulus;
        std::erase_if(all, [&](std::uint64_t p) { return p % ap->modulus != r; });
    }
    return all;
}

std::vector<std::uint64_t> PrimeStream::take(std::size_t count) const {
    if (count == 0) return {};
    if (const auto* list = std::get_if<ExplicitPrimes>(&kind_)) {
        std::vector<std::uint64_t> within = list->primes;
        if (limit_) std::erase_if(within, [&](std::uint64_t p) { return p > *limit_; });
        if (within.size() > count) within.resize(count);
        return within;
    }
    std::uint64_t hard_cap = limit_ ? std::min(*limit_, kSieveCap) : kSieveCap;
    for (std::uint64_t bound = std::max<std::uint64_t>(64, 16 * count);; bound *= 4) {
        bound = std::min(bound, hard_cap);
        auto primes = primes_up_to(*this, std::max<std::uint64_t>(bound, 2));
        if (primes.size() >= count) {
            primes.resize(count);
            return primes;
        }
        if (bound >= hard_cap) {
            if (limit_ && *limit_ <= kSieveCap) return primes;
            throw ResourceError("prime enumeration beyond sieve cap of " + std::to_string(kSieveCap));
        }
    }
}

std::vector<std::uint64_t> PrimeStream::first(std::size_t count) const {
    auto primes = take(count);
    if (primes.size() < count)
        throw ResourceError("prime stream has only " + std::to_string(primes.size()) +
                            " primes, " + std::to_string(count) + " requested");
    return primes;
}

std::size_t PrimeStream::index_of(std::uint64_t q) const {
    auto primes = primes_up_to(*this, std::max<std::uint64_t>(q, 2));
    auto it = std::lower_bound(primes.begin(), primes.end(), q);
    if (it == primes.end() || *it != q)
        throw ArgumentError(std::to_string(q) + " is not a member of the prime stream");
    return static_cast<std::size_t>(it - primes.begin()) + 1;
}

std::string to_string(const PrimeStream& stream) {
    std::ostringstream os;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AllPrimes>) {
                os << "all";
            } else if constexpr (std::is_same_v<K, ArithmeticProgression>) {
                os << "ap(" << k.residue << "," << k.modulus << ")";
            } else {
                for (std::size_t i = 0; i < k.primes.size(); ++i) os << (i ? "," : "") << k.primes[i];
            }
        },
        stream.kind());
    if (stream.limit()) os << ";limit=" << *stream.limit();
    return os.str();
}

// ---------------------------------------------------------------------------
// Valuations, totient, factorization

long padic_val(const Integer& p, const Integer& n) {
    if (n == 0) throw ValuationError("p-adic valuation of zero is undefined");
    Integer m = abs(n);
    long v = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

long padic_val(const Integer& p, const Rat& x) {
    if (!is_prime(p)) throw ArgumentError("valuation base " + p.get_str() + " is not prime");
    if (x.is_zero()) throw ValuationError("p-adic valuation of zero is undefined");
    return padic_val(p, x.num()) - padic_val(p, x.den());
}

std::uint64_t euler_totient(std::uint64_t n) {
    if (n == 0) throw ArgumentError("totient of zero is undefined");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n <= 0) throw ArgumentError("can only factor positive integers");
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = n;
    std::uint64_t done = 0;
    for (std::uint64_t bound = 1 << 12; m > 1; bound = std::min(kSieveCap, bound * 16)) {
        for (std::uint64_t p : sieve_primes(bound)) {
            if (p <= done) continue;
            Integer pz = to_integer(p);
            if (pz * pz > m) {
                out.emplace_back(m, 1);
                m = 1;
                break;
            }
            unsigned e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
                ++e;
            }
            if (e) out.emplace_back(std::move(pz), e);
        }
        done = bound;
        if (m > 1 && is_prime(m)) {
            out.emplace_back(m, 1);
            m = 1;
        }
        if (m > 1 && bound >= kSieveCap)
            throw ResourceError("cannot factor " + n.get_str() + " within the sieve cap");
    }
    return out;
}

std::set<Integer> dp_support(const Rat& x, const PrimeStream& primes) {
    std::set<Integer> out;
    if (x.den() == 1) return out;
    if (const auto* list = std::get_if<ExplicitPrimes>(&primes.kind())) {
        for (std::uint64_t p : list->primes) {
            if (primes.limit() && p > *primes.limit()) break;
            Integer pz = to_integer(p);
            if (mpz_divisible_p(x.den().get_mpz_t(), pz.get_mpz_t())) out.insert(pz);
        }
        return out;
    }
    for (const auto& [q, e] : factorize(x.den()))
        if (primes.contains_prime(q)) out.insert(q);
    return out;
}

std::set<Integer> dp_support(std::span<const Rat> values, const PrimeStream& primes) {
    std::set<Integer> out;
    for (const Rat& r : values) out.merge(dp_support(r, primes));
    return out;
}

Integer lcm_denominators(std::span<const Rat> values) {
    if (values.empty()) throw ArgumentError("lcm of an empty denominator list");
    Integer l = 1;
    for (const Rat& r : values) l = lcm(l, r.den());
    return l;
}

}  // namespace pm
