#include <doctest.h>

#include "oracles.hpp"
#include "pm/descriptors.hpp"
#include "pm/errors.hpp"
#include "pm/witnesses.hpp"

using namespace pm;

namespace {

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rat> out;
    for (auto [n, d] : v) out.push_back(Rat(n, d));
    return out;
}

}  // namespace

TEST_SUITE("witnesses") {

TEST_CASE("partial sums") {
    auto a = witness_partial_sums(PrimeStream::all(), 3);
    CHECK(a.generators == rats({{1, 2}, {5, 6}, {31, 30}}));
    CHECK(a.claimed_atoms == a.generators);
    CHECK(a.verified());
    CHECK(oracle::atoms_of(oracle::of(a.generators)) == oracle::of(a.generators));
    auto b = witness_partial_sums(PrimeStream::explicit_list({2, 3}), 2);
    CHECK(b.generators == rats({{1, 2}, {5, 6}}));
    CHECK(b.verified());
    CHECK(witness_partial_sums(PrimeStream::all(), 1).generators == rats({{1, 2}}));
    CHECK_THROWS_AS(witness_partial_sums(PrimeStream::explicit_list({2, 3}), 3), ResourceError);
}

TEST_CASE("two-cluster example") {
    auto two = witness_example_ab(2);
    CHECK(two.generators == rats({{1, 3}, {1, 2}, {1, 7}, {4, 5}}));
    CHECK(two.verified());
    CHECK(oracle::atoms_of(oracle::of(two.generators)).size() == 4);
    auto three = witness_example_ab(3);
    CHECK(three.generators[4] == Rat(1, 13));
    CHECK(three.generators[5] == Rat(10, 11));
    CHECK(witness_example_ab(1).generators == rats({{1, 3}, {1, 2}}));
}

TEST_CASE("infinite atom sequences") {
    auto half = witness_infinite_atoms(MonoidDescriptor::geometric(Rat(1, 2)), 3);
    CHECK(half.generators == rats({{1, 2}, {3, 4}, {7, 8}}));
    CHECK(half.verified());
    auto third = witness_infinite_atoms(MonoidDescriptor::geometric(Rat(1, 3)), 2);
    CHECK(third.generators == rats({{1, 3}, {4, 9}}));
    auto primary = witness_infinite_atoms(MonoidDescriptor::primary(PrimeStream::all()), 1);
    CHECK(primary.generators == rats({{1, 2}}));
    CHECK(primary.verified());

    for (const auto& d : {MonoidDescriptor::primary(PrimeStream::progression(1, 4)), MonoidDescriptor::example_ab(),
                          MonoidDescriptor::geometric(Rat(2, 3)), MonoidDescriptor::prime_fractions(1)}) {
        auto w = witness_infinite_atoms(d, 6);
        CAPTURE(serialize_descriptor(d));
        CHECK(w.verified());
        mpz_class seen = 1;
        for (std::size_t i = 0; i < w.generators.size(); ++i) {
            auto q = oracle::of(w.generators[i]);
            if (i > 0) CHECK(oracle::of(w.generators[i - 1]) < q);
            CHECK(seen % q.get_den() != 0);
            mpz_lcm(seen.get_mpz_t(), seen.get_mpz_t(), q.get_den_mpz_t());
        }
    }
    CHECK_THROWS_AS(witness_infinite_atoms(MonoidDescriptor::geometric(Rat(3)), 2), ArgumentError);
}

TEST_CASE("non-monotone submonoid") {
    auto w = witness_non_monotone_submonoid(MonoidDescriptor::prime_fractions(1), 1);
    CHECK(w.generators == rats({{24, 13}, {36, 13}}));
    CHECK(w.verified());
    auto w2 = witness_non_monotone_submonoid(MonoidDescriptor::prime_fractions(1), 2);
    CHECK(w2.generators == rats({{24, 13}, {36, 13}, {32, 17}, {48, 17}}));
    auto empty = witness_non_monotone_submonoid(MonoidDescriptor::prime_fractions(1), 0);
    CHECK(empty.generators.empty());
    CHECK(empty.verified());

    auto geo = witness_non_monotone_submonoid(MonoidDescriptor::geometric_partial_sums(Rat(1, 3)), 4);
    CHECK(geo.verified());
    oracle::Q l = oracle::q(1, 2);
    for (std::size_t i = 0; i < geo.generators.size(); ++i) {
        oracle::Q g = oracle::of(geo.generators[i]);
        oracle::Q centre = l * (i % 2 == 0 ? 2 : 3);
        CHECK(abs(g - centre) < l / 4);
    }
    CHECK(oracle::atoms_of(oracle::of(geo.generators)).size() == geo.generators.size());
    CHECK_THROWS_AS(witness_non_monotone_submonoid(MonoidDescriptor::geometric(Rat(2, 3)), 1), ArgumentError);
}

TEST_CASE("geometric partial sums") {
    CHECK(witness_geo_psums(Rat(1, 2), 3).generators == rats({{1, 2}, {3, 4}, {7, 8}}));
    CHECK(witness_geo_psums(Rat(1, 2), 3).verified());
    auto third = witness_geo_psums(Rat(1, 3), 2);
    CHECK(third.generators == rats({{1, 3}, {4, 9}}));
    CHECK(third.verified());
    CHECK(witness_geo_psums(Rat(1, 2), 1).generators == rats({{1, 2}}));
    auto wide = witness_geo_psums(Rat(3, 4), 5);
    bool atoms = oracle::atoms_of(oracle::of(wide.generators)) == oracle::of(wide.generators);
    CHECK(wide.verified() == atoms);
    CHECK_THROWS_AS(witness_geo_psums(Rat(3, 2), 2), ArgumentError);
}

TEST_CASE("unbounded geometric witness") {
    auto w = witness_unbounded_geo(Rat(2, 3), 3);
    CHECK(w.generators == rats({{8, 3}, {76, 9}, {656, 27}}));
    CHECK(w.verified());
    CHECK(witness_unbounded_geo(Rat(3, 2), 2).generators == rats({{9, 2}, {81, 4}}));
    auto one = witness_unbounded_geo(Rat(2, 3), 1);
    CHECK(one.generators == rats({{8, 3}}));
    CHECK(one.verified());
    CHECK_THROWS_AS(witness_unbounded_geo(Rat(1, 2), 2), ArgumentError);
}

TEST_CASE("verified reports stay verified with more depth") {
    auto again = [](const WitnessReport& w, const WitnessReport& deeper) {
        CHECK(w.verified());
        CHECK(deeper.verified());
        CHECK(deeper.verified_depth >= w.verified_depth + 2);
        CHECK(std::equal(w.generators.begin(), w.generators.end(), deeper.generators.begin()));
    };
    again(witness_partial_sums(PrimeStream::all(), 5), witness_partial_sums(PrimeStream::all(), 5, 11));
    again(witness_example_ab(3), witness_example_ab(3, 9));
    again(witness_unbounded_geo(Rat(2, 3), 4), witness_unbounded_geo(Rat(2, 3), 4, 10));
    again(witness_geo_psums(Rat(3, 4), 3), witness_geo_psums(Rat(3, 4), 3, 9));
    again(witness_infinite_atoms(MonoidDescriptor::geometric(Rat(1, 2)), 4),
          witness_infinite_atoms(MonoidDescriptor::geometric(Rat(1, 2)), 4, 10));
}

}  // TEST_SUITE
