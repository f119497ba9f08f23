#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pm/errors.hpp"
#include "pm/exactnum.hpp"

using namespace pm;

TEST_SUITE("exactnum") {

TEST_CASE("rationals are stored reduced") {
    Rat a = rat_make(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    Rat z = rat_make(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    Rat five = rat_make(5, 1);
    CHECK(five.is_integer());
    CHECK(five.to_string() == "5");
    CHECK(a.to_string() == "3/2");
}

TEST_CASE("invalid rationals are rejected") {
    CHECK_THROWS_AS(rat_make(1, 0), ArgumentError);
    CHECK_THROWS_AS(rat_make(1, -2), ArgumentError);
    CHECK_THROWS_AS(rat_make(-1, 2), ArgumentError);
    CHECK_THROWS_AS(Rat(1, 2) - Rat(3, 4), ArgumentError);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), ArgumentError);
}

TEST_CASE("arithmetic agrees with mpq") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(0, 500), den(1, 500);
    for (int i = 0; i < 500; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        oracle::Q qa = oracle::of(a), qb = oracle::of(b);
        CHECK(oracle::of(a + b) == qa + qb);
        CHECK(oracle::of(a * b) == qa * qb);
        CHECK((a < b) == (qa < qb));
        CHECK((a == b) == (qa == qb));
        if (a >= b) CHECK(oracle::of(a - b) == qa - qb);
        if (!b.is_zero()) CHECK(oracle::of(a / b) == qa / qb);
    }
    CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
}

TEST_CASE("parsing reports positions") {
    CHECK(parse_rat("12/8") == Rat(3, 2));
    CHECK(parse_rat("7") == Rat(7));
    try {
        parse_rat("3/0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("-1/2"), ParseError);
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_val(Integer(2), Rat(3, 8)) == -3);
    CHECK(padic_val(Integer(3), Rat(18)) == 2);
    CHECK(padic_val(Integer(5), Rat(7, 4)) == 0);
    CHECK_THROWS_AS(padic_val(Integer(2), Rat(0)), ValuationError);
    CHECK_THROWS_AS(padic_val(Integer(4), Rat(1, 2)), ArgumentError);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(1, 10000), den(1, 10000);
    for (int i = 0; i < 200; ++i) {
        Rat x(num(rng), den(rng));
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
            CHECK(padic_val(Integer(p), x) == oracle::valuation(p, oracle::of(x)));
    }
}

TEST_CASE("prime enumeration") {
    CHECK(primes_up_to(PrimeStream::all(), 12) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK(primes_up_to(PrimeStream::progression(1, 4), 30) == std::vector<std::uint64_t>{5, 13, 17, 29});
    CHECK(primes_up_to(PrimeStream::explicit_list({2, 3, 5}), 4) == std::vector<std::uint64_t>{2, 3});
    CHECK_THROWS_AS(PrimeStream::progression(2, 4), ArgumentError);
    CHECK_THROWS_AS(PrimeStream::explicit_list({2, 4}), ArgumentError);
    CHECK_THROWS_AS(PrimeStream::explicit_list({3, 2}), ArgumentError);

    auto reference = oracle::eratosthenes(200000);
    CHECK(sieve_primes(200000) == reference);
    std::vector<std::uint64_t> ap;
    for (auto p : reference)
        if (p % 10 == 3) ap.push_back(p);
    CHECK(primes_up_to(PrimeStream::progression(3, 10), 200000) == ap);
    CHECK(PrimeStream::progression(3, 10).first(5) == std::vector<std::uint64_t>{3, 13, 23, 43, 53});
    CHECK(PrimeStream::all().index_of(13) == 6);
}

TEST_CASE("finite streams run out") {
    auto p = PrimeStream::explicit_list({2, 3, 5});
    CHECK(p.take(10).size() == 3);
    CHECK_THROWS_AS(p.first(4), ResourceError);
    auto limited = PrimeStream::all(20);
    CHECK(limited.is_finite());
    CHECK(limited.take(100).size() == 8);
}

TEST_CASE("totient matches a gcd count") {
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(7) == 6);
    CHECK(euler_totient(12) == 4);
    CHECK_THROWS_AS(euler_totient(0), ArgumentError);
    for (std::uint64_t n = 1; n <= 500; ++n) CHECK(euler_totient(n) == oracle::totient(n));
}

TEST_CASE("denominator support") {
    using S = std::set<Integer>;
    CHECK(dp_support(Rat(7, 12), PrimeStream::explicit_list({2, 3, 5})) == S{2, 3});
    CHECK(dp_support(Rat(5), PrimeStream::all()).empty());
    auto p23 = PrimeStream::explicit_list({2, 3});
    CHECK(dp_support(Rat(5, 6), p23) == S{2, 3});
    std::vector<Rat> parts{Rat(1, 2), Rat(1, 3)};
    CHECK(dp_support(parts, p23) == S{2, 3});
    CHECK(dp_support(Rat(1, 15), PrimeStream::progression(1, 4)) == S{5});
}

TEST_CASE("lcm of denominators") {
    CHECK(lcm_denominators(std::vector<Rat>{Rat(1, 2), Rat(3, 4)}) == 4);
    CHECK(lcm_denominators(std::vector<Rat>{Rat(2), Rat(5)}) == 1);
    CHECK(lcm_denominators(std::vector<Rat>{Rat(1, 6), Rat(1, 10), Rat(1, 15)}) == 30);
    CHECK_THROWS_AS(lcm_denominators(std::vector<Rat>{}), ArgumentError);
}

TEST_CASE("factorization") {
    auto f = factorize(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, unsigned>{2, 3});
    CHECK(f[1] == std::pair<Integer, unsigned>{3, 2});
    CHECK(f[2] == std::pair<Integer, unsigned>{5, 1});
    auto g = factorize(Integer(12) * Integer("1000000007"));
    REQUIRE(g.size() == 3);
    CHECK(g[2] == std::pair<Integer, unsigned>{Integer("1000000007"), 1});
    // Two prime factors beyond the trial-division cap.
    CHECK_THROWS_AS(factorize(Integer("1000000007") * Integer("998244353")), ResourceError);
}

}  // TEST_SUITE
