#include "pm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pm/citations.hpp"
#include "pm/errors.hpp"
#include "pm/numsgp.hpp"

namespace pm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Enlargement cap for the strongly increasing families.
constexpr std::size_t kMaxIncreasingDepth = 512;

struct IndexedGen {
    std::size_t index;
    Rat value;
};

std::vector<IndexedGen> indexed(const std::vector<Rat>& gens) {
    std::vector<IndexedGen> out;
    out.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) out.push_back({i + 1, gens[i]});
    return out;
}

enum class Outcome { Found, NotFound, DenominatorMiss, Aborted };

struct Search {
    Outcome outcome = Outcome::NotFound;
    std::vector<Term> terms;
};

// Exact decision of x over a finite generator list, preferring earlier list
// entries. Only generators <= x can appear in a representation.
Search search_exact(std::span<const IndexedGen> gens, const Rat& x, SearchBudget* budget) {
    std::vector<const IndexedGen*> usable;
    for (const IndexedGen& g : gens)
        if (g.value <= x) usable.push_back(&g);
    if (usable.empty()) return {};

    Integer scale = 1;
    for (const IndexedGen* g : usable) scale = lcm(scale, g->value.den());
    Integer prod = scale * x.num();
    if (!mpz_divisible_p(prod.get_mpz_t(), x.den().get_mpz_t())) return {Outcome::DenominatorMiss, {}};
    Integer target = prod / x.den();

    std::vector<Integer> ints;
    ints.reserve(usable.size());
    for (const IndexedGen* g : usable) ints.push_back(g->value.num() * (scale / g->value.den()));

    std::optional<std::vector<Integer>> mult;
    try {
        mult = represent_in_order(ints, target, budget);
    } catch (const BudgetExhausted&) {
        throw;
    } catch (const ResourceError&) {
        return {Outcome::Aborted, {}};
    }
    if (!mult) return {};
    Search s{Outcome::Found, {}};
    for (std::size_t i = 0; i < usable.size(); ++i)
        if ((*mult)[i] > 0) s.terms.push_back({usable[i]->index, usable[i]->value, (*mult)[i]});
    std::sort(s.terms.begin(), s.terms.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    return s;
}

// Prefixes of length 1, 2, 4, ..., n; the first hit wins. When nothing is
// found the outcome of the full list is returned.
Search search_prefixes(std::span<const IndexedGen> gens, const Rat& x, SearchBudget* budget) {
    const std::size_t n = gens.size();
    if (n == 0) return {};
    for (std::size_t j = 1;; j = std::min(n, 2 * j)) {
        Search s = search_exact(gens.first(j), x, budget);
        if (s.outcome == Outcome::Found || j == n) return s;
    }
}

MembershipVerdict make_in(std::vector<Term> terms, const Rat& x, std::size_t depth) {
    if (resum(terms) != x)
        throw std::logic_error("membership certificate does not re-sum to " + x.to_string());
    for (const Term& t : terms) depth = std::max(depth, t.index);
    return {verdict::In{std::move(terms), depth}};
}

MembershipVerdict not_in(verdict::Refutation reason) { return {verdict::NotIn{std::move(reason)}}; }

MembershipVerdict unknown(std::size_t depth) { return {verdict::UnknownAtDepth{depth}}; }

// Every prime of d(x) divides b.
bool denominator_supported_by(const Rat& x, const Integer& b) {
    Integer d = x.den();
    while (d != 1) {
        Integer g = gcd(d, b);
        if (g == 1) return false;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
    }
    return true;
}

// Least k >= 0 with d(x) | b^k; assumes denominator_supported_by(x, b).
std::size_t clearing_exponent(const Rat& x, const Integer& b) {
    std::size_t k = 0;
    Integer power = 1;
    while (!mpz_divisible_p(power.get_mpz_t(), x.den().get_mpz_t())) {
        power *= b;
        ++k;
    }
    return k;
}

bool squarefree_denominator(const Rat& x) {
    for (const auto& [p, e] : factorize(x.den()))
        if (e > 1) return false;
    return true;
}

std::uint64_t prime_word(const Integer& q) {
    if (!q.fits_ulong_p() || q > to_integer(kSieveCap))
        throw ResourceError("prime " + q.get_str() + " lies beyond the sieve cap");
    return q.get_ui();
}

std::optional<std::size_t> stream_size(const PrimeStream& p) {
    if (!p.is_finite()) return std::nullopt;
    if (const auto* list = std::get_if<ExplicitPrimes>(&p.kind())) {
        if (!p.limit()) return list->primes.size();
        return static_cast<std::size_t>(
            std::upper_bound(list->primes.begin(), list->primes.end(), *p.limit()) - list->primes.begin());
    }
    if (*p.limit() < 2) return 0;
    return primes_up_to(p, *p.limit()).size();
}

// Families whose enumeration increases strictly to infinity: any
// representation of x only uses generators <= x, so once the enumeration
// passes x the finite decision is exact.
MembershipVerdict member_increasing(const MonoidDescriptor& d, const Rat& x, std::size_t k,
                                    std::optional<std::size_t> family_size, SearchBudget& budget,
                                    std::size_t& reported) {
    if (family_size) k = std::min(k, *family_size);
    if (k == 0) return not_in(verdict::ExhaustiveRefutation{});
    std::vector<Rat> gens;
    bool complete = false;
    for (;;) {
        gens = generators_up_to(d, Truncation(k));
        if ((family_size && k >= *family_size) || gens.back() > x) {
            complete = true;
            break;
        }
        if (k >= kMaxIncreasingDepth) break;
        k = std::min(kMaxIncreasingDepth, 2 * k);
        if (family_size) k = std::min(k, *family_size);
    }
    reported = k;
    auto ig = indexed(gens);
    Search s = search_prefixes(ig, x, &budget);
    if (s.outcome == Outcome::Found) return make_in(std::move(s.terms), x, k);
    if (!complete || s.outcome == Outcome::Aborted) return unknown(k);
    if (x < gens.front()) return not_in(verdict::BelowMinimum{});
    if (s.outcome == Outcome::DenominatorMiss) return not_in(verdict::DenominatorObstruction{});
    return not_in(verdict::ExhaustiveRefutation{});
}

MembershipVerdict member_finite(const family::Finite& f, const Rat& x) {
    auto gens = indexed(f.generators);
    Search s = search_exact(gens, x, nullptr);
    switch (s.outcome) {
        case Outcome::Found:
            return make_in(std::move(s.terms), x, gens.size());
        case Outcome::DenominatorMiss:
            return not_in(verdict::DenominatorObstruction{});
        case Outcome::Aborted:
            throw ResourceError("finite membership table exceeds cap");
        case Outcome::NotFound:
            break;
    }
    Rat smallest = *std::min_element(f.generators.begin(), f.generators.end());
    if (x < smallest) return not_in(verdict::BelowMinimum{});
    return not_in(verdict::ExhaustiveRefutation{});
}

MembershipVerdict member_geometric(const MonoidDescriptor& d, const family::Geometric& f, const Rat& x,
                                   std::size_t k, SearchBudget& budget, std::size_t& reported) {
    const Integer& a = f.ratio.num();
    const Integer& b = f.ratio.den();
    if (b == 1) {
        // <a, a^2, ...> = <a>.
        if (!x.is_integer()) return not_in(verdict::DenominatorObstruction{});
        if (mpz_divisible_p(x.num().get_mpz_t(), a.get_mpz_t()))
            return make_in({Term{1, f.ratio, x.num() / a}}, x, k);
        if (x < f.ratio) return not_in(verdict::BelowMinimum{});
        return not_in(verdict::ExhaustiveRefutation{});
    }
    if (a == 1) {
        // x = (x b^k) * (1/b^k) once b^k clears d(x).
        if (!denominator_supported_by(x, b)) return not_in(verdict::DenominatorObstruction{});
        std::size_t e = std::max<std::size_t>(1, clearing_exponent(x, b));
        Rat gen = pow(f.ratio, e);
        Integer copies = x.num() * (gen.den() / x.den());
        return make_in({Term{e, gen, copies}}, x, k);
    }
    if (a > b) return member_increasing(d, x, k, std::nullopt, budget, reported);

    // 1 < a < b: every element has denominator dividing a power of b and, for
    // p | a, valuation at least v_p(a).
    if (!denominator_supported_by(x, b)) return not_in(verdict::DenominatorObstruction{});
    for (const auto& [p, alpha] : factorize(a))
        if (padic_val(p, x.num()) < static_cast<long>(alpha))
            return not_in(verdict::ValuationObstruction{p});
    std::size_t depth = std::max(k, clearing_exponent(x, b));
    reported = depth;
    auto gens = indexed(generators_up_to(d, Truncation(depth)));
    Search s = search_prefixes(gens, x, &budget);
    if (s.outcome == Outcome::Found) return make_in(std::move(s.terms), x, depth);
    return unknown(depth);
}

MembershipVerdict member_primary(const family::Primary& f, const Rat& x, std::size_t k) {
    auto first = f.primes.take(1);
    if (first.empty()) return not_in(verdict::ExhaustiveRefutation{});

    // x = sum rho_q / q + s with 0 <= rho_q < q and s integral; the surplus s
    // goes onto the first generator as s * p_1 copies of 1/p_1.
    std::vector<Term> terms;
    Rat floor_sum;
    for (const auto& [q, e] : factorize(x.den())) {
        if (e > 1) return not_in(verdict::DenominatorObstruction{});
        if (!f.primes.contains_prime(q)) return not_in(verdict::DenominatorObstruction{});
        Integer cofactor = x.den() / q;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), q.get_mpz_t());
        Integer rho = x.num() * inv;
        mpz_mod(rho.get_mpz_t(), rho.get_mpz_t(), q.get_mpz_t());
        Rat gen(Integer(1), q);
        floor_sum += Rat(rho, q);
        terms.push_back({f.primes.index_of(prime_word(q)), gen, rho});
    }
    if (x < floor_sum) return not_in(verdict::ExhaustiveRefutation{});
    Rat surplus = x - floor_sum;
    if (!surplus.is_integer()) throw std::logic_error("primary surplus is not integral");
    if (!surplus.is_zero()) {
        Integer p1 = to_integer(first.front());
        Integer extra = surplus.num() * p1;
        auto it = std::find_if(terms.begin(), terms.end(), [](const Term& t) { return t.index == 1; });
        if (it != terms.end())
            it->multiplicity += extra;
        else
            terms.push_back({1, Rat(Integer(1), p1), extra});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    return make_in(std::move(terms), x, k);
}

// Finite generator subsets that are exact for the prime-denominator families.
// A generator whose prime q does not divide d(x) can only occur with a
// multiplicity divisible by q, so it contributes q * g_q to x.
MembershipVerdict member_support_reduced(std::vector<IndexedGen> gens, const Rat& x, std::size_t k,
                                         SearchBudget& budget, std::size_t& reported) {
    std::sort(gens.begin(), gens.end(), [](const IndexedGen& a, const IndexedGen& b) { return a.index < b.index; });
    gens.erase(std::unique(gens.begin(), gens.end(),
                           [](const IndexedGen& a, const IndexedGen& b) { return a.index == b.index; }),
               gens.end());
    std::size_t depth = k;
    for (const IndexedGen& g : gens) depth = std::max(depth, g.index);
    reported = depth;
    Search s = search_exact(gens, x, &budget);
    switch (s.outcome) {
        case Outcome::Found:
            return make_in(std::move(s.terms), x, k);
        case Outcome::Aborted:
            return unknown(depth);
        case Outcome::DenominatorMiss:
            return not_in(verdict::DenominatorObstruction{});
        case Outcome::NotFound:
            break;
    }
    return not_in(verdict::ExhaustiveRefutation{});
}

MembershipVerdict member_prime_fractions_one(const Rat& x, std::size_t k, SearchBudget& budget,
                                             std::size_t& reported) {
    if (!squarefree_denominator(x)) return not_in(verdict::DenominatorObstruction{});
    if (x < Rat(1, 2)) return not_in(verdict::BelowMinimum{});
    const PrimeStream all = PrimeStream::all();
    std::vector<IndexedGen> gens;
    auto add = [&](std::uint64_t p) {
        Integer pz = to_integer(p);
        gens.push_back({all.index_of(p), Rat(pz - 1, pz)});
    };
    for (const auto& [q, e] : factorize(x.den())) add(prime_word(q));
    Integer small = x.floor() + 1;
    for (std::uint64_t p : primes_up_to(all, std::max<std::uint64_t>(2, prime_word(small)))) add(p);
    return member_support_reduced(std::move(gens), x, k, budget, reported);
}

MembershipVerdict member_example_ab(const Rat& x, std::size_t k, SearchBudget& budget,
                                    std::size_t& reported) {
    if (!squarefree_denominator(x)) return not_in(verdict::DenominatorObstruction{});
    const PrimeStream all = PrimeStream::all();
    std::vector<IndexedGen> gens;
    // p_j with j even is A_{j/2} at index j - 1; j odd is B_{(j+1)/2} at index j + 1.
    auto add = [&](std::uint64_t p) {
        std::size_t j = all.index_of(p);
        Integer pz = to_integer(p);
        if (j % 2 == 0)
            gens.push_back({j - 1, Rat(Integer(1), pz)});
        else
            gens.push_back({j + 1, Rat(pz - 1, pz)});
    };
    // Integral contributions of unused A-primes can always move onto 1/3.
    add(3);
    for (const auto& [q, e] : factorize(x.den())) add(prime_word(q));
    Integer small = x.floor() + 1;
    for (std::uint64_t p : primes_up_to(all, std::max<std::uint64_t>(2, prime_word(small))))
        if (all.index_of(p) % 2 == 1) add(p);
    return member_support_reduced(std::move(gens), x, k, budget, reported);
}

MembershipVerdict member_geo_psums(const MonoidDescriptor& d, const family::GeometricPartialSums& f,
                                   const Rat& x, std::size_t k, SearchBudget& budget, std::size_t& reported) {
    if (f.ratio >= Rat(1)) return member_increasing(d, x, k, std::nullopt, budget, reported);
    const Integer& b = f.ratio.den();
    if (!denominator_supported_by(x, b)) return not_in(verdict::DenominatorObstruction{});
    if (x < f.ratio) return not_in(verdict::BelowMinimum{});
    std::size_t depth = std::max(k, clearing_exponent(x, b));
    reported = depth;
    auto gens = indexed(generators_up_to(d, Truncation(depth)));
    Search s = search_prefixes(gens, x, &budget);
    if (s.outcome == Outcome::Found) return make_in(std::move(s.terms), x, depth);
    return unknown(depth);
}

}  // namespace

Rat resum(std::span<const Term> terms) {
    Rat sum;
    for (const Term& t : terms) sum += t.multiplicity * t.generator;
    return sum;
}

MembershipVerdict member(const MonoidDescriptor& d, const Rat& x, Truncation depth,
                         std::uint64_t node_budget) {
    const std::size_t k = depth.depth();
    if (x.is_zero()) return {verdict::In{{}, k}};
    SearchBudget budget(node_budget);
    std::size_t reported = k;
    try {
        return std::visit(
            overloaded{
                [&](const family::Finite& f) { return member_finite(f, x); },
                [&](const family::Geometric& f) { return member_geometric(d, f, x, k, budget, reported); },
                [&](const family::Primary& f) { return member_primary(f, x, k); },
                [&](const family::PartialSumsPrimary& f) {
                    return member_increasing(d, x, k, stream_size(f.primes), budget, reported);
                },
                [&](const family::ExampleAB&) { return member_example_ab(x, k, budget, reported); },
                [&](const family::PrimeFractions& f) {
                    if (f.power == 2) return member_increasing(d, x, k, std::nullopt, budget, reported);
                    return member_prime_fractions_one(x, k, budget, reported);
                },
                [&](const family::GeometricPartialSums& f) {
                    return member_geo_psums(d, f, x, k, budget, reported);
                },
                [&](const family::UnboundedGeometricWitness&) {
                    return member_increasing(d, x, k, std::nullopt, budget, reported);
                },
            },
            d.kind());
    } catch (const BudgetExhausted&) {
        return unknown(reported);
    }
}

// ---------------------------------------------------------------------------
// Atoms

std::vector<Rat> increasing_filter(std::span<const Rat> increasing) {
    for (std::size_t i = 1; i < increasing.size(); ++i)
        if (!(increasing[i - 1] < increasing[i]))
            throw ArgumentError("increasing filter needs a strictly increasing sequence");
    std::vector<Rat> kept;
    for (const Rat& r : increasing) {
        // <r_1..r_{n-1}> equals the monoid generated by the atoms kept so far.
        std::vector<IndexedGen> prior = indexed(kept);
        Search s = search_exact(prior, r, nullptr);
        if (s.outcome == Outcome::Aborted)
            throw ResourceError("increasing filter table exceeds cap at " + r.to_string());
        if (s.outcome != Outcome::Found) kept.push_back(r);
    }
    return kept;
}

std::vector<Rat> brute_force_atoms(std::span<const Rat> values) {
    std::vector<Rat> set(values.begin(), values.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() > kBruteForceLimit)
        throw ResourceError("brute force atom search limited to " + std::to_string(kBruteForceLimit) +
                            " elements");
    for (const Rat& r : set)
        if (r.is_zero()) throw ArgumentError("brute force atoms need positive rationals");

    std::vector<Rat> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Rat& target = set[i];
        std::vector<Rat> others;
        for (std::size_t j = 0; j < set.size(); ++j)
            if (j != i && set[j] <= target) others.push_back(set[j]);
        bool representable = false;
        if (!others.empty()) {
            Integer scale = lcm_denominators(others);
            Integer prod = scale * target.num();
            if (mpz_divisible_p(prod.get_mpz_t(), target.den().get_mpz_t())) {
                Integer t = prod / target.den();
                std::vector<Integer> ints;
                Integer g = 0;
                for (const Rat& o : others) {
                    ints.push_back(o.num() * (scale / o.den()));
                    g = gcd(g, ints.back());
                }
                if (mpz_divisible_p(t.get_mpz_t(), g.get_mpz_t())) {
                    t /= g;
                    if (t > to_integer(kTableCap))
                        throw ResourceError("brute force table for " + target.to_string() + " exceeds cap");
                    std::uint64_t u = t.get_ui();
                    std::vector<char> reach(u + 1, 0);
                    reach[0] = 1;
                    for (Integer& v : ints) {
                        std::uint64_t h = Integer(v / g).get_ui();
                        for (std::uint64_t s = h; s <= u; ++s)
                            if (reach[s - h]) reach[s] = 1;
                    }
                    representable = reach[u] != 0;
                }
            }
        }
        if (!representable) out.push_back(target);
    }
    return out;
}

AtomReport atoms(const MonoidDescriptor& d, Truncation depth) {
    const std::size_t k = depth.depth();
    auto prefix = [&] { return generators_up_to(d, depth); };
    return std::visit(
        overloaded{
            [&](const family::Finite& f) {
                std::vector<Rat> sorted = f.generators;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                return AtomReport{increasing_filter(sorted), exactness::ExactByIncreasingFilter{}, false};
            },
            [&](const family::Geometric& f) {
                if (f.ratio.den() == 1)
                    return AtomReport{{Rat(f.ratio.num())}, exactness::ClosedForm{cite::kGeometric}, false};
                if (f.ratio.num() == 1)
                    return AtomReport{{}, exactness::ClosedForm{cite::kGeometric}, true};
                return AtomReport{prefix(), exactness::ClosedForm{cite::kGeometric}, false};
            },
            [&](const family::Primary&) {
                return AtomReport{prefix(), exactness::ClosedForm{cite::kPrimaryAtomsOracle}, false};
            },
            [&](const family::PartialSumsPrimary& f) {
                std::size_t n = k;
                if (auto size = stream_size(f.primes)) n = std::min(n, *size);
                if (n == 0) return AtomReport{{}, exactness::ExactByIncreasingFilter{}, false};
                auto gens = generators_up_to(d, Truncation(n));
                return AtomReport{increasing_filter(gens), exactness::ExactByIncreasingFilter{}, false};
            },
            [&](const family::ExampleAB&) {
                return AtomReport{prefix(), exactness::ClosedForm{cite::kExampleAB}, false};
            },
            [&](const family::PrimeFractions&) {
                return AtomReport{prefix(), exactness::ClosedForm{cite::kPrimeFractions}, false};
            },
            [&](const family::GeometricPartialSums& f) {
                if (f.ratio == Rat(1, 2))
                    return AtomReport{prefix(), exactness::ClosedForm{cite::kGeoPartialSums}, false};
                return AtomReport{increasing_filter(prefix()), exactness::ExactByIncreasingFilter{}, false};
            },
            [&](const family::UnboundedGeometricWitness&) {
                return AtomReport{prefix(), exactness::ClosedForm{cite::kUnboundedGeometric}, false};
            },
        },
        d.kind());
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(MonotoneClass c) {
    switch (c) {
        case MonotoneClass::StronglyIncreasing: return "strongly increasing";
        case MonotoneClass::WeaklyIncreasing: return "weakly increasing";
        case MonotoneClass::StronglyDecreasing: return "strongly decreasing";
        case MonotoneClass::WeaklyDecreasing: return "weakly decreasing";
        case MonotoneClass::NotMonotone: return "not monotone";
        case MonotoneClass::Both: return "both (finitely generated)";
    }
    return "?";
}

std::string to_string(Atomicity a) {
    switch (a) {
        case Atomicity::Atomic: return "atomic";
        case Atomicity::Antimatter: return "antimatter";
        case Atomicity::HereditarilyAtomic: return "hereditarily atomic";
    }
    return "?";
}

namespace {

void cite_all(StructureReport& r, const char* source) {
    for (const char* flag : {"finitely_generated", "iso_to_numerical_semigroup", "monotone_class", "bounded",
                             "strongly_bounded", "atomicity"})
        r.citations.push_back({flag, source});
}

void set_citation(StructureReport& r, const std::string& flag, const char* source) {
    for (Citation& c : r.citations)
        if (c.flag == flag) {
            c.source = source;
            return;
        }
    r.citations.push_back({flag, source});
}

StructureReport numerical_semigroup_like(const char* source) {
    StructureReport r;
    r.is_finitely_generated = true;
    r.iso_to_numerical_semigroup = true;
    r.monotone_class = MonotoneClass::Both;
    r.bounded = true;
    r.strongly_bounded = true;
    r.atomicity = Atomicity::Atomic;
    cite_all(r, source);
    set_citation(r, "monotone_class", cite::kBothMonotone);
    return r;
}

}  // namespace

StructureReport classify(const MonoidDescriptor& d) {
    return std::visit(
        overloaded{
            [&](const family::Finite&) { return numerical_semigroup_like(cite::kScaling); },
            [&](const family::Geometric& f) {
                const Integer& a = f.ratio.num();
                const Integer& b = f.ratio.den();
                if (b == 1) {
                    StructureReport r = numerical_semigroup_like(cite::kScaling);
                    set_citation(r, "atomicity", cite::kGeometric);
                    set_citation(r, "strongly_bounded", cite::kGeometricBoundedness);
                    return r;
                }
                StructureReport r;
                r.atomicity = a == 1 ? Atomicity::Antimatter : Atomicity::Atomic;
                cite_all(r, cite::kScaling);
                set_citation(r, "atomicity", cite::kGeometric);
                set_citation(r, "bounded", cite::kGeometricBoundedness);
                set_citation(r, "strongly_bounded", cite::kGeometricBoundedness);
                if (a == 1) {
                    r.bounded = r.strongly_bounded = true;
                    r.monotone_class = MonotoneClass::StronglyDecreasing;
                    set_citation(r, "monotone_class", cite::kStronglyBoundedDecreasing);
                } else if (a < b) {
                    r.bounded = true;
                    r.monotone_class = MonotoneClass::StronglyDecreasing;
                    set_citation(r, "monotone_class", cite::kGeometric);
                } else {
                    r.monotone_class = MonotoneClass::StronglyIncreasing;
                    set_citation(r, "monotone_class", cite::kGeometric);
                }
                return r;
            },
            [&](const family::Primary& f) {
                auto size = stream_size(f.primes);
                StructureReport r;
                if (size && *size == 0) {
                    r.is_finitely_generated = true;
                    r.monotone_class = MonotoneClass::Both;
                    r.bounded = r.strongly_bounded = true;
                    r.atomicity = Atomicity::HereditarilyAtomic;
                    cite_all(r, cite::kTrivialMonoid);
                    r.notes.push_back("empty prime set: the trivial monoid");
                    return r;
                }
                r.is_finitely_generated = size.has_value();
                r.iso_to_numerical_semigroup = size.has_value();
                r.monotone_class = size ? MonotoneClass::Both : MonotoneClass::StronglyDecreasing;
                r.bounded = r.strongly_bounded = true;
                r.atomicity = Atomicity::HereditarilyAtomic;
                cite_all(r, cite::kScaling);
                set_citation(r, "monotone_class", size ? cite::kBothMonotone : cite::kStronglyBoundedDecreasing);
                set_citation(r, "bounded", cite::kPrimaryDefinition);
                set_citation(r, "strongly_bounded", cite::kPrimaryDefinition);
                set_citation(r, "atomicity", cite::kPrimaryHereditary);
                if (!size) {
                    r.notes.push_back("contains an unbounded submonoid (partial sums of 1/p)");
                    r.citations.push_back({"unbounded_submonoid", cite::kPrimaryUnboundedSubmonoid});
                }
                return r;
            },
            [&](const family::PartialSumsPrimary& f) {
                if (auto size = stream_size(f.primes)) {
                    StructureReport r = numerical_semigroup_like(cite::kScaling);
                    if (*size == 0) {
                        r.iso_to_numerical_semigroup = false;
                        r.notes.push_back("empty prime set: the trivial monoid");
                    }
                    return r;
                }
                StructureReport r;
                r.atomicity = Atomicity::Atomic;
                r.monotone_class = MonotoneClass::StronglyIncreasing;
                cite_all(r, cite::kScaling);
                set_citation(r, "atomicity", cite::kIncreasingAtomic);
                set_citation(r, "monotone_class", cite::kMertensEstimate);
                set_citation(r, "bounded", cite::kPartialSumsAtoms);
                set_citation(r, "strongly_bounded", cite::kPartialSumsAtoms);
                r.notes.push_back("prime set is substantial, so the partial sums diverge");
                return r;
            },
            [&](const family::ExampleAB&) {
                StructureReport r;
                r.monotone_class = MonotoneClass::NotMonotone;
                r.bounded = true;
                r.atomicity = Atomicity::Atomic;
                cite_all(r, cite::kExampleAB);
                r.notes.push_back("atoms accumulate at two limit points, 0 and 1");
                return r;
            },
            [&](const family::PrimeFractions& f) {
                StructureReport r;
                r.atomicity = Atomicity::Atomic;
                r.bounded = f.power == 1;
                r.monotone_class =
                    f.power == 1 ? MonotoneClass::WeaklyIncreasing : MonotoneClass::StronglyIncreasing;
                cite_all(r, cite::kPrimeFractions);
                set_citation(r, "monotone_class", cite::kIncreasingAtomic);
                set_citation(r, "iso_to_numerical_semigroup", cite::kScaling);
                return r;
            },
            [&](const family::GeometricPartialSums& f) {
                if (f.ratio.is_integer()) {
                    StructureReport r = numerical_semigroup_like(cite::kScaling);
                    set_citation(r, "atomicity", cite::kIncreasingAtomic);
                    return r;
                }
                StructureReport r;
                r.atomicity = Atomicity::Atomic;
                cite_all(r, cite::kScaling);
                set_citation(r, "atomicity", cite::kIncreasingAtomic);
                if (f.ratio < Rat(1)) {
                    r.bounded = true;
                    r.monotone_class = MonotoneClass::WeaklyIncreasing;
                    set_citation(r, "bounded", cite::kGeoPartialSums);
                    set_citation(r, "strongly_bounded", cite::kGeoPartialSums);
                    set_citation(r, "monotone_class", cite::kGeoPartialSums);
                } else {
                    r.monotone_class = MonotoneClass::StronglyIncreasing;
                    set_citation(r, "monotone_class", cite::kIncreasingAtomic);
                    set_citation(r, "bounded", cite::kIncreasingAtomic);
                }
                return r;
            },
            [&](const family::UnboundedGeometricWitness&) {
                StructureReport r;
                r.atomicity = Atomicity::Atomic;
                r.monotone_class = MonotoneClass::StronglyIncreasing;
                cite_all(r, cite::kUnboundedGeometric);
                set_citation(r, "iso_to_numerical_semigroup", cite::kScaling);
                return r;
            },
        },
        d.kind());
}

// ---------------------------------------------------------------------------
// Substantiality

namespace {

struct Fraction {
    Integer num;
    Integer den;
};

// Primes are distinct, so the binary-split numerator stays coprime to the
// product of the primes and needs no gcd.
Fraction split_sum(std::span<const std::uint64_t> primes) {
    if (primes.size() == 1) return {Integer(1), to_integer(primes[0])};
    auto half = primes.size() / 2;
    Fraction l = split_sum(primes.first(half));
    Fraction r = split_sum(primes.subspan(half));
    return {l.num * r.den + r.num * l.den, l.den * r.den};
}

}  // namespace

Rat reciprocal_sum(std::span<const std::uint64_t> primes) {
    if (primes.empty()) return Rat();
    Fraction f = split_sum(primes);
    return Rat(std::move(f.num), std::move(f.den));
}

SubstantialityReport is_substantial(const PrimeStream& primes, std::span<const std::uint64_t> checkpoints) {
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1])
            throw ArgumentError("substantiality checkpoints must be strictly increasing");

    SubstantialityReport report;
    report.verdict = primes.is_finite() ? Substantiality::Insubstantial : Substantiality::Substantial;

    if (primes.is_finite()) {
        std::vector<std::uint64_t> all;
        if (const auto* list = std::get_if<ExplicitPrimes>(&primes.kind())) {
            all = list->primes;
            if (primes.limit()) std::erase_if(all, [&](std::uint64_t p) { return p > *primes.limit(); });
        } else if (*primes.limit() >= 2) {
            all = primes_up_to(primes, *primes.limit());
        }
        report.total = reciprocal_sum(all);
    }

    if (checkpoints.empty()) return report;
    std::vector<std::uint64_t> below;
    if (checkpoints.back() >= 2) below = primes_up_to(primes, checkpoints.back());

    const auto* progression = std::get_if<ArithmeticProgression>(&primes.kind());
    double inv_phi = progression ? 1.0 / static_cast<double>(euler_totient(progression->modulus)) : 0.0;

    Rat running;
    auto cursor = below.begin();
    for (std::uint64_t x : checkpoints) {
        auto end = std::upper_bound(cursor, below.end(), x);
        if (end == cursor) continue;
        running += reciprocal_sum(std::span<const std::uint64_t>(&*cursor, static_cast<std::size_t>(end - cursor)));
        cursor = end;
        report.partial_sums.emplace_back(x, running);
        if (progression && !primes.is_finite() && x >= 3) {
            double loglog = std::log(std::log(static_cast<double>(x)));
            report.mertens_offsets.emplace_back(x, running.to_double() - inv_phi * loglog);
        }
    }
    return report;
}

}  // namespace pm
