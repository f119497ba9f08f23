#pragma once

// Reference implementations for the tests. They share no code with the
// library: rationals are GMP mpq_class, tables are plain vectors.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pm/exactnum.hpp"

namespace oracle {

using Q = mpq_class;

inline Q q(long n, long d = 1) {
    Q r(n, d);
    r.canonicalize();
    return r;
}

inline Q of(const pm::Rat& r) {
    Q out(r.num(), r.den());
    out.canonicalize();
    return out;
}

inline std::vector<Q> of(const std::vector<pm::Rat>& v) {
    std::vector<Q> out;
    for (const auto& r : v) out.push_back(of(r));
    return out;
}

inline mpz_class lcm_den(const std::vector<Q>& v) {
    mpz_class l = 1;
    for (const Q& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    return l;
}

constexpr std::uint64_t kCap = 2'000'000'000;

/// x in <gens> by an unbounded-knapsack bit table over the scaled integers.
/// Sums of the usable generators have denominators dividing their lcm, so a
/// target outside that lattice is rejected before any table is built.
inline bool representable(const std::vector<Q>& gens, const Q& x) {
    if (x == 0) return true;
    std::vector<Q> use;
    for (const Q& g : gens)
        if (g <= x) use.push_back(g);
    if (use.empty()) return false;
    mpz_class l = lcm_den(use);
    Q tx = x * Q(l);
    if (tx.get_den() != 1) return false;
    mpz_class t = tx.get_num();
    if (t > kCap) throw std::runtime_error("oracle table too large");
    const std::uint64_t target = t.get_ui();
    std::vector<std::uint64_t> reach(target / 64 + 1, 0);
    auto get = [&](std::uint64_t i) { return (reach[i / 64] >> (i % 64)) & 1u; };
    reach[0] = 1;
    for (const Q& g : use) {
        Q tg = g * Q(l);
        const std::uint64_t step = mpz_class(tg.get_num()).get_ui();
        if (step < 64) {
            for (std::uint64_t i = step; i <= target; ++i)
                if (get(i - step)) reach[i / 64] |= std::uint64_t{1} << (i % 64);
            continue;
        }
        // Sources sit at least one word behind, so an ascending word sweep sees
        // them already final: this is the unbounded recurrence.
        const std::uint64_t ws = step / 64, bs = step % 64;
        for (std::uint64_t w = ws; w < reach.size(); ++w) {
            std::uint64_t v = reach[w - ws] << bs;
            if (bs && w > ws) v |= reach[w - ws - 1] >> (64 - bs);
            reach[w] |= v;
        }
    }
    return get(target) != 0;
}

/// Elements of the set not reachable from the others, ascending.
inline std::vector<Q> atoms_of(std::vector<Q> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Q> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Q> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (!representable(others, gens[i])) out.push_back(gens[i]);
    }
    return out;
}

inline std::vector<std::uint64_t> eratosthenes(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

/// v_p of a nonzero rational by repeated division.
inline long valuation(unsigned long p, const Q& x) {
    long v = 0;
    mpz_class n = x.get_num(), d = x.get_den();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

/// Membership table of the integer semigroup <gens> on [0, bound].
inline std::vector<char> semigroup_table(const std::vector<unsigned long>& gens, unsigned long bound) {
    std::vector<char> in(bound + 1, 0);
    in[0] = 1;
    for (unsigned long v = 1; v <= bound; ++v)
        for (unsigned long g : gens)
            if (g <= v && in[v - g]) {
                in[v] = 1;
                break;
            }
    return in;
}

struct SemigroupFacts {
    long frobenius = -1;
    unsigned long gaps = 0;
    std::vector<unsigned long> apery;  // w.r.t. the smallest generator
};

/// Direct scan; gens must have gcd 1. Bound: Frobenius < max * min.
inline SemigroupFacts semigroup_facts(const std::vector<unsigned long>& gens) {
    unsigned long lo = *std::min_element(gens.begin(), gens.end());
    unsigned long hi = *std::max_element(gens.begin(), gens.end());
    unsigned long bound = lo * hi + hi;
    auto in = semigroup_table(gens, bound);
    SemigroupFacts f;
    for (unsigned long v = 0; v <= bound; ++v)
        if (!in[v]) {
            f.frobenius = static_cast<long>(v);
            ++f.gaps;
        }
    f.apery.assign(lo, 0);
    for (unsigned long r = 0; r < lo; ++r) {
        unsigned long v = r;
        while (!in[v]) v += lo;
        f.apery[r] = v;
    }
    return f;
}

inline Q reciprocal_sum(const std::vector<std::uint64_t>& primes) {
    Q s = 0;
    for (std::uint64_t p : primes) s += Q(1, static_cast<unsigned long>(p));
    return s;
}

}  // namespace oracle
