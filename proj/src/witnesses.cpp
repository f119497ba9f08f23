#include "pm/witnesses.hpp"

#include <algorithm>

#include "pm/citations.hpp"
#include "pm/engine.hpp"
#include "pm/errors.hpp"
#include "pm/numsgp.hpp"

namespace pm {

namespace {

constexpr std::size_t kEnumerationCap = 4096;

WitnessReport start(std::string construction, const char* provenance, std::size_t depth) {
    WitnessReport r;
    r.construction = std::move(construction);
    r.provenance = provenance;
    r.verified_depth = depth;
    r.verdict = witness::Verified{};
    return r;
}

void fail(WitnessReport& r, std::size_t index, std::string detail) {
    if (r.verified()) r.verdict = witness::FailedAt{index, std::move(detail)};
}

// Is c a combination of the elements of window other than c itself? Only
// elements <= c can take part.
bool representable_by_others(std::span<const Rat> window, const Rat& c) {
    std::vector<Rat> others;
    for (const Rat& g : window)
        if (g != c && g <= c) others.push_back(g);
    if (others.empty()) return false;
    Integer scale = lcm_denominators(others);
    Integer prod = scale * c.num();
    if (!mpz_divisible_p(prod.get_mpz_t(), c.den().get_mpz_t())) return false;
    std::vector<Integer> ints;
    ints.reserve(others.size());
    for (const Rat& g : others) ints.push_back(g.num() * (scale / g.den()));
    return represent_in_order(ints, prod / c.den()).has_value();
}

// Marks the first claimed atom that some combination of the rest of the
// window reaches. Indices are positions in r.generators.
void check_atoms(WitnessReport& r, std::span<const Rat> window) {
    for (std::size_t i = 0; i < r.claimed_atoms.size(); ++i) {
        const Rat& c = r.claimed_atoms[i];
        if (representable_by_others(window, c)) {
            auto pos = std::find(r.generators.begin(), r.generators.end(), c) - r.generators.begin();
            fail(r, static_cast<std::size_t>(pos) + 1, c.to_string() + " is a sum of other generators");
            return;
        }
    }
}

void check_strictly_increasing(WitnessReport& r) {
    for (std::size_t i = 1; i < r.generators.size(); ++i)
        if (!(r.generators[i - 1] < r.generators[i])) {
            fail(r, i + 1, "sequence is not strictly increasing");
            return;
        }
}

}  // namespace

std::size_t default_witness_depth(std::size_t n) { return n + 4; }

WitnessReport witness_partial_sums(const PrimeStream& primes, std::size_t n, std::optional<std::size_t> depth) {
    if (n == 0) throw ArgumentError("partial-sums witness needs N >= 1");
    std::size_t k = std::max(n, depth.value_or(default_witness_depth(n)));
    primes.first(n);
    const std::size_t available = primes.take(k).size();
    WitnessReport r = start("partial-sums", cite::kPartialSumsAtoms, available);
    const auto d = MonoidDescriptor::partial_sums_primary(primes);
    std::vector<Rat> window = generators_up_to(d, Truncation(available));
    r.generators.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(n));
    r.claimed_atoms = r.generators;
    check_strictly_increasing(r);
    check_atoms(r, window);
    return r;
}

WitnessReport witness_example_ab(std::size_t n, std::optional<std::size_t> depth) {
    if (n == 0) throw ArgumentError("example-ab witness needs N >= 1");
    std::size_t k = std::max(n, depth.value_or(default_witness_depth(n)));
    WitnessReport r = start("example-ab", cite::kExampleAB, k);
    std::vector<Rat> window = generators_up_to(MonoidDescriptor::example_ab(), Truncation(2 * k));
    r.generators.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(2 * n));
    r.claimed_atoms = r.generators;
    std::string a_part, b_part;
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        std::string& part = i % 2 == 0 ? a_part : b_part;
        if (!part.empty()) part += ", ";
        part += r.generators[i].to_string();
    }
    r.notes.push_back("A = [" + a_part + "] accumulates at 0");
    r.notes.push_back("B = [" + b_part + "] accumulates at 1");
    check_atoms(r, window);
    return r;
}

WitnessReport witness_infinite_atoms(const MonoidDescriptor& d, std::size_t n, std::optional<std::size_t> depth) {
    if (classify(d).iso_to_numerical_semigroup)
        throw ArgumentError("infinite-atoms witness needs a monoid not isomorphic to a numerical semigroup");
    std::size_t k = std::max<std::size_t>(1, depth.value_or(default_witness_depth(n)));
    WitnessReport r = start("infinite-atoms", cite::kInfiniteAtoms, k);

    // Denominators of <r_1..r_j> are exactly the divisors of the lcm of the
    // d(r_i), so a generator whose denominator does not divide it is fresh.
    std::vector<Rat> window;
    std::size_t window_depth = k;
    Integer seen = 1;
    for (std::size_t step = 0; step < n; ++step) {
        const Rat* pick = nullptr;
        for (;;) {
            window = generators_up_to(d, Truncation(window_depth));
            for (const Rat& g : window) {
                if (mpz_divisible_p(seen.get_mpz_t(), g.den().get_mpz_t())) continue;
                if (!pick || g.den() < pick->den()) pick = &g;
            }
            if (pick) break;
            if (window_depth >= kEnumerationCap || window.size() < window_depth)
                throw ResourceError("no generator with a new denominator within the enumeration budget");
            window_depth = std::min(kEnumerationCap, 2 * window_depth);
        }
        Integer m = 1;
        if (!r.generators.empty()) {
            const Rat& last = r.generators.back();
            // Least m with m * pick > last, then the next one coprime to d(pick).
            m = (last.num() * pick->den()) / (last.den() * pick->num()) + 1;
            while (gcd(m, pick->den()) != 1) ++m;
        }
        r.notes.push_back("m_" + std::to_string(step + 1) + " = " + m.get_str() + " on " + pick->to_string());
        r.generators.push_back(m * *pick);
        seen = lcm(seen, pick->den());
    }
    r.claimed_atoms = r.generators;
    check_strictly_increasing(r);
    Integer before = 1;
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        const Integer& den = r.generators[i].den();
        if (mpz_divisible_p(before.get_mpz_t(), den.get_mpz_t())) fail(r, i + 1, "denominator is not new");
        before = lcm(before, den);
    }
    check_atoms(r, r.generators);
    return r;
}

std::optional<Rat> accumulation_limit(const MonoidDescriptor& d) {
    if (const auto* f = d.as<family::PrimeFractions>(); f && f->power == 1) return Rat(1);
    if (const auto* f = d.as<family::GeometricPartialSums>(); f && f->ratio < Rat(1))
        return f->ratio / (Rat(1) - f->ratio);
    return std::nullopt;
}

WitnessReport witness_non_monotone_submonoid(const MonoidDescriptor& d, std::size_t n) {
    auto limit = accumulation_limit(d);
    if (!limit) throw ArgumentError("non-monotone witness needs prime-fractions:1 or geo-psums with r < 1");
    const Rat& l = *limit;
    WitnessReport r = start("non-monotone", cite::kNonMonotoneConverse, n);
    r.notes.push_back("limit l = " + l.to_string());
    if (n == 0) return r;

    const Rat threshold = l * Rat(11, 12);
    std::vector<Rat> chosen;
    for (std::size_t k = default_witness_depth(n);; k = std::min(kEnumerationCap, 2 * k)) {
        chosen.clear();
        for (const Rat& a : generators_up_to(d, Truncation(k)))
            if (a > threshold && chosen.size() < n) chosen.push_back(a);
        if (chosen.size() == n) break;
        if (k >= kEnumerationCap) throw ResourceError("threshold 11l/12 unreachable within the enumeration budget");
    }
    for (const Rat& a : chosen) {
        r.generators.push_back(Rat(2) * a);
        r.generators.push_back(Rat(3) * a);
    }
    r.claimed_atoms = r.generators;

    const Rat quarter = l / Rat(4);
    const Rat ceiling = Rat(3) * l + quarter;
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        const Rat& g = r.generators[i];
        const Rat centre = Rat(i % 2 == 0 ? 2 : 3) * l;
        if (!(g + quarter > centre && g < centre + quarter)) fail(r, i + 1, "outside the l/4 window");
        if (std::count(r.generators.begin(), r.generators.end(), g) > 1) fail(r, i + 1, "repeated generator");
    }
    // Any sum of two generators exceeds 3l + l/4, which bounds every generator.
    const Rat smallest = *std::min_element(r.generators.begin(), r.generators.end());
    const Rat largest = *std::max_element(r.generators.begin(), r.generators.end());
    if (!(Rat(2) * smallest > ceiling)) fail(r, 1, "pairwise sums do not clear 3l + l/4");
    if (!(largest < ceiling)) fail(r, r.generators.size(), "generator above 3l + l/4");
    return r;
}

WitnessReport witness_geo_psums(const Rat& ratio, std::size_t n, std::optional<std::size_t> depth) {
    if (ratio.is_zero() || ratio >= Rat(1)) throw ArgumentError("geo-psums witness needs 0 < r < 1");
    if (n == 0) throw ArgumentError("geo-psums witness needs N >= 1");
    std::size_t k = std::max(n, depth.value_or(default_witness_depth(n)));
    WitnessReport r = start("geo-psums", cite::kGeoPartialSums, k);
    const auto d = MonoidDescriptor::geometric_partial_sums(ratio);
    r.generators = generators_up_to(d, Truncation(n));
    r.claimed_atoms = r.generators;
    check_strictly_increasing(r);

    if (ratio == Rat(1, 2)) {
        for (std::size_t i = 0; i < n; ++i) {
            Integer p = Integer(1) << static_cast<mp_bitcnt_t>(i + 1);
            if (r.generators[i] != Rat(p - 1, p)) fail(r, i + 1, "differs from (2^n - 1)/2^n");
        }
    }
    const Rat l = ratio / (Rat(1) - ratio);
    for (std::size_t i = 0; i < n; ++i)
        if (!(r.generators[i] < l)) fail(r, i + 1, "generator not below the limit");
    if (Rat(2) * ratio >= l) {
        // Every pairwise sum is at least 2r >= l, above every generator.
        r.notes.push_back("pairwise-sum bound: 2r >= l = " + l.to_string());
    } else {
        r.notes.push_back("table check against the first " + std::to_string(k) + " generators");
        std::vector<Rat> window = generators_up_to(d, Truncation(k));
        check_atoms(r, window);
    }
    return r;
}

WitnessReport witness_unbounded_geo(const Rat& ratio, std::size_t n, std::optional<std::size_t> depth) {
    if (ratio.num() <= 1 || ratio.den() <= 1)
        throw ArgumentError("unbounded-geo witness needs both parts of r above 1");
    std::size_t k = std::max(n, depth.value_or(default_witness_depth(n)));
    WitnessReport r = start("unbounded-geo", cite::kUnboundedGeometric, k);
    if (n == 0) return r;
    const auto d = MonoidDescriptor::unbounded_geometric_witness(ratio);
    std::vector<Rat> window = generators_up_to(d, Truncation(k));
    r.generators.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(n));
    r.claimed_atoms = r.generators;
    check_strictly_increasing(r);
    auto primes_of_b = factorize(ratio.den());
    for (std::size_t i = 0; i < n; ++i) {
        const Rat& s = r.generators[i];
        const long idx = static_cast<long>(i + 1);
        if (!(s > Rat(static_cast<long>(idx)))) fail(r, i + 1, "s_n <= n");
        for (const auto& [p, e] : primes_of_b)
            if (padic_val(p, s) != -idx * padic_val(p, ratio.den()))
                fail(r, i + 1, "valuation at p=" + p.get_str() + " differs from -n v_p(b)");
    }
    check_atoms(r, window);
    return r;
}

}  // namespace pm
