#include <doctest.h>

#include "oracles.hpp"
#include "pm/descriptors.hpp"
#include "pm/engine.hpp"
#include "pm/errors.hpp"

using namespace pm;

namespace {

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rat> out;
    for (auto [n, d] : v) out.push_back(Rat(n, d));
    return out;
}

std::vector<MonoidDescriptor> every_kind() {
    return {
        MonoidDescriptor::finite(rats({{1, 2}, {3, 4}})),
        MonoidDescriptor::geometric(Rat(2, 3)),
        MonoidDescriptor::primary(PrimeStream::all()),
        MonoidDescriptor::primary(PrimeStream::progression(1, 4)),
        MonoidDescriptor::primary(PrimeStream::explicit_list({2, 3, 7})),
        MonoidDescriptor::primary(PrimeStream::progression(3, 4, 1000)),
        MonoidDescriptor::partial_sums_primary(PrimeStream::explicit_list({2, 3, 5})),
        MonoidDescriptor::partial_sums_primary(PrimeStream::all()),
        MonoidDescriptor::example_ab(),
        MonoidDescriptor::prime_fractions(1),
        MonoidDescriptor::prime_fractions(2),
        MonoidDescriptor::geometric_partial_sums(Rat(1, 2)),
        MonoidDescriptor::unbounded_geometric_witness(Rat(3, 2)),
    };
}

}  // namespace

TEST_SUITE("descriptors") {

TEST_CASE("generator enumeration") {
    auto g = [](const MonoidDescriptor& d, std::size_t k) { return generators_up_to(d, Truncation(k)); };
    CHECK(g(MonoidDescriptor::geometric(Rat(2, 3)), 3) == rats({{2, 3}, {4, 9}, {8, 27}}));
    CHECK(g(MonoidDescriptor::partial_sums_primary(PrimeStream::all()), 3) == rats({{1, 2}, {5, 6}, {31, 30}}));
    CHECK(g(MonoidDescriptor::geometric_partial_sums(Rat(1, 2)), 3) == rats({{1, 2}, {3, 4}, {7, 8}}));
    CHECK(g(MonoidDescriptor::unbounded_geometric_witness(Rat(2, 3)), 2) == rats({{8, 3}, {76, 9}}));
    CHECK(g(MonoidDescriptor::unbounded_geometric_witness(Rat(3, 2)), 2) == rats({{9, 2}, {81, 4}}));
    CHECK(g(MonoidDescriptor::example_ab(), 4) == rats({{1, 3}, {1, 2}, {1, 7}, {4, 5}}));
    CHECK(g(MonoidDescriptor::example_ab(), 6) == rats({{1, 3}, {1, 2}, {1, 7}, {4, 5}, {1, 13}, {10, 11}}));
    CHECK(g(MonoidDescriptor::prime_fractions(1), 3) == rats({{1, 2}, {2, 3}, {4, 5}}));
    CHECK(g(MonoidDescriptor::prime_fractions(2), 3) == rats({{3, 2}, {8, 3}, {24, 5}}));
    CHECK(g(MonoidDescriptor::primary(PrimeStream::progression(1, 4)), 3) == rats({{1, 5}, {1, 13}, {1, 17}}));
    CHECK(g(MonoidDescriptor::primary(PrimeStream::explicit_list({2, 3})), 5) == rats({{1, 2}, {1, 3}}));
    CHECK(g(MonoidDescriptor::partial_sums_primary(PrimeStream::explicit_list({2, 3})), 3) ==
          rats({{1, 2}, {5, 6}}));
    CHECK_THROWS_AS(Truncation(0), ArgumentError);
}

TEST_CASE("enumerations are prefix-stable, positive and reduced") {
    for (const auto& d : every_kind()) {
        if (d.as<family::Finite>()) continue;
        std::size_t k = 12;
        if (const auto* p = d.as<family::PartialSumsPrimary>(); p && p->primes.is_finite()) k = 2;
        auto shorter = generators_up_to(d, Truncation(k));
        auto longer = generators_up_to(d, Truncation(k + 1));
        REQUIRE(shorter.size() <= longer.size());
        CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
        for (const Rat& r : longer) {
            CHECK_FALSE(r.is_zero());
            CHECK(oracle::of(r).get_num() == r.num());
            CHECK(oracle::of(r).get_den() == r.den());
        }
    }
}

TEST_CASE("parsing") {
    CHECK(parse_descriptor("geometric:2/3") == MonoidDescriptor::geometric(Rat(2, 3)));
    CHECK(parse_descriptor("primary:ap(1,4)") == MonoidDescriptor::primary(PrimeStream::progression(1, 4)));
    CHECK(parse_descriptor("finite:1/2,3/4") == MonoidDescriptor::finite(rats({{1, 2}, {3, 4}})));
    CHECK(parse_descriptor("  example-ab ") == MonoidDescriptor::example_ab());
    CHECK(parse_descriptor("primary:all;limit=100") == MonoidDescriptor::primary(PrimeStream::all(100)));
    CHECK(parse_descriptor("geometric:4/6") == MonoidDescriptor::geometric(Rat(2, 3)));
}

TEST_CASE("parse errors carry positions") {
    auto position = [](const char* text) -> long {
        try {
            parse_descriptor(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position("geometric:2/0") == 12);
    CHECK(position("geometric:0.5") >= 10);
    CHECK(position("bogus:1") == 0);
    CHECK(position("primary:ap(2,4)") >= 8);
    CHECK(position("primary:2,4") >= 8);
    CHECK(position("prime-fractions:3") == 16);
    CHECK(position("finite:") == 7);
    CHECK(position("geometric:0") >= 10);
    CHECK(position("unbounded-geo:1/2") >= 14);
    CHECK(position("example-ab:1") == 10);
}

TEST_CASE("serialization") {
    CHECK(serialize_descriptor(MonoidDescriptor::geometric(Rat(2, 3))) == "geometric:2/3");
    CHECK(serialize_descriptor(MonoidDescriptor::partial_sums_primary(PrimeStream::explicit_list({2, 3, 5}))) ==
          "psums-primary:2,3,5");
    CHECK(serialize_descriptor(MonoidDescriptor::prime_fractions(2)) == "prime-fractions:2");
    for (const auto& d : every_kind()) {
        CAPTURE(serialize_descriptor(d));
        CHECK(parse_descriptor(serialize_descriptor(d)) == d);
    }
}

TEST_CASE("family invariants are enforced") {
    CHECK_THROWS_AS(MonoidDescriptor::finite({}), ArgumentError);
    CHECK_THROWS_AS(MonoidDescriptor::finite(rats({{0, 1}})), ArgumentError);
    CHECK_THROWS_AS(MonoidDescriptor::geometric(Rat(0)), ArgumentError);
    CHECK_THROWS_AS(MonoidDescriptor::unbounded_geometric_witness(Rat(2)), ArgumentError);
    CHECK_THROWS_AS(MonoidDescriptor::prime_fractions(3), ArgumentError);
}

TEST_CASE("classification agrees with the enumerated ordering") {
    for (const auto& d : every_kind()) {
        if (d.as<family::Finite>()) continue;
        CAPTURE(serialize_descriptor(d));
        auto gens = generators_up_to(d, Truncation(50));
        bool up = std::adjacent_find(gens.begin(), gens.end(), std::greater_equal<>()) == gens.end();
        bool down = std::adjacent_find(gens.begin(), gens.end(), std::less_equal<>()) == gens.end();
        switch (classify(d).monotone_class) {
            case MonotoneClass::StronglyIncreasing:
            case MonotoneClass::WeaklyIncreasing: CHECK(up); break;
            case MonotoneClass::StronglyDecreasing:
            case MonotoneClass::WeaklyDecreasing: CHECK(down); break;
            case MonotoneClass::NotMonotone: CHECK_FALSE(up); CHECK_FALSE(down); break;
            case MonotoneClass::Both: CHECK(classify(d).is_finitely_generated); break;
        }
    }
}

}  // TEST_SUITE
