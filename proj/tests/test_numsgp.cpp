#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pm/errors.hpp"
#include "pm/numsgp.hpp"

using namespace pm;

namespace {

NumericalSemigroup ns(std::initializer_list<long> g) {
    std::vector<Integer> v;
    for (long x : g) v.push_back(Integer(x));
    return ns_from_integers(v);
}

std::vector<Integer> ints(std::initializer_list<long> g) {
    std::vector<Integer> v;
    for (long x : g) v.push_back(Integer(x));
    return v;
}

}  // namespace

TEST_SUITE("numsgp") {

TEST_CASE("construction normalizes content") {
    auto a = ns({6, 9, 20});
    CHECK(a.content() == 1);
    CHECK(a.multiplicity() == 6);
    auto b = ns({4, 6});
    CHECK(b.content() == 2);
    CHECK(b.reduced_generators() == ints({2, 3}));
    auto c = ns({5});
    CHECK(c.content() == 5);
    CHECK(c.reduced_generators() == ints({1}));
    CHECK_THROWS_AS(ns_from_integers({}), ArgumentError);
    CHECK_THROWS_AS(ns({3, 0}), ArgumentError);
}

TEST_CASE("scaling rationals to integers") {
    auto a = ns_from_rationals(std::vector<Rat>{Rat(1, 2), Rat(3, 4)});
    CHECK(*a.scale() == 4);
    CHECK(a.generators() == ints({2, 3}));
    auto b = ns_from_rationals(std::vector<Rat>{Rat(3, 2), Rat(9, 4)});
    CHECK(*b.scale() == 4);
    CHECK(b.generators() == ints({6, 9}));
    CHECK(b.content() == 3);
    auto c = ns_from_rationals(std::vector<Rat>{Rat(2), Rat(5)});
    CHECK(*c.scale() == 1);
    CHECK(c.generators() == ints({2, 5}));
    CHECK(scaled_target(a, Rat(5, 4)) == Integer(5));
    CHECK_FALSE(scaled_target(a, Rat(1, 3)).has_value());
}

TEST_CASE("containment with representations") {
    auto s = ns({2, 3});
    CHECK_FALSE(ns_contains(s, Integer(1)).member);
    auto five = ns_contains(s, Integer(5));
    REQUIRE(five.member);
    CHECK(*five.representation == Representation{{Integer(2), Integer(1)}, {Integer(3), Integer(1)}});
    auto mc = ns({6, 9, 20});
    CHECK_FALSE(ns_contains(mc, Integer(43)).member);
    CHECK(ns_contains(mc, Integer(44)).member);
    auto table = oracle::semigroup_table({6, 9, 20}, 120);
    for (long t = 0; t <= 120; ++t) {
        auto c = ns_contains(mc, Integer(t));
        CHECK(c.member == (table[t] != 0));
        if (c.member) {
            Integer sum = 0;
            for (const auto& [g, k] : *c.representation) sum += g * k;
            CHECK(sum == t);
        }
    }
}

TEST_CASE("large targets go through the residue route") {
    auto s = ns({1000003, 1000033});
    Integer t = Integer("123456789012345");
    auto c = ns_contains(s, t);
    REQUIRE(c.member);
    Integer sum = 0;
    for (const auto& [g, k] : *c.representation) sum += g * k;
    CHECK(sum == t);
}

TEST_CASE("Apery sets") {
    CHECK(ns_apery(ns({3, 5}), Integer(3)) == ints({0, 10, 5}));
    CHECK(ns_apery(ns({2, 3}), Integer(2)) == ints({0, 3}));
    CHECK(ns_apery(ns({1}), Integer(1)) == ints({0}));
    CHECK(ns_apery(ns({3, 5}), Integer(5)) == ints({0, 6, 12, 3, 9}));
    CHECK_THROWS_AS(ns_apery(ns({3, 5}), Integer(7)), ArgumentError);
    CHECK_THROWS_AS(ns_apery(ns({4, 6}), Integer(4)), ArgumentError);
}

TEST_CASE("Frobenius number and genus") {
    CHECK(*ns_frobenius(ns({3, 5})) == 7);
    CHECK(*ns_frobenius(ns({6, 9, 20})) == 43);
    CHECK_FALSE(ns_frobenius(ns({2, 4})).has_value());
    CHECK(*ns_frobenius(ns({1})) == -1);
    CHECK(ns_genus(ns({3, 5})) == 4);
    CHECK(ns_genus(ns({1})) == 0);
    CHECK(ns_genus(ns({2, 3})) == 1);
    CHECK_THROWS_AS(ns_genus(ns({2, 4})), ArgumentError);
}

TEST_CASE("minimal generators") {
    CHECK(ns_minimal_generators(ns({4, 6, 9, 10})) == ints({4, 6, 9}));
    CHECK(ns_minimal_generators(ns({2, 3, 4})) == ints({2, 3}));
    CHECK(ns_minimal_generators(ns({7})) == ints({7}));
}

TEST_CASE("invariants agree with a direct scan") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> count(1, 4), value(2, 40);
    int checked = 0;
    while (checked < 60) {
        std::vector<unsigned long> g;
        std::vector<Integer> gz;
        unsigned long d = 0;
        for (int k = count(rng); k > 0; --k) {
            g.push_back(static_cast<unsigned long>(value(rng)));
            gz.push_back(Integer(g.back()));
            d = std::gcd(d, g.back());
        }
        if (d != 1) continue;
        ++checked;
        auto s = ns_from_integers(gz);
        auto facts = oracle::semigroup_facts(g);
        CHECK(*ns_frobenius(s) == facts.frobenius);
        CHECK(ns_genus(s) == facts.gaps);
        auto apery = ns_apery(s, s.multiplicity());
        REQUIRE(apery.size() == facts.apery.size());
        for (std::size_t i = 0; i < apery.size(); ++i) CHECK(apery[i] == facts.apery[i]);
    }
}

TEST_CASE("budget exhaustion") {
    SearchBudget budget(10);
    CHECK_THROWS_AS(represent_in_order(ints({7, 11}), Integer(1000), &budget), BudgetExhausted);
    SearchBudget roomy(1'000'000);
    auto m = represent_in_order(ints({7, 11}), Integer(1000), &roomy);
    REQUIRE(m.has_value());
    CHECK((*m)[0] * 7 + (*m)[1] * 11 == 1000);
    // Earlier generators take as much as they can.
    CHECK((*m)[0] == 135);
}

}  // TEST_SUITE
