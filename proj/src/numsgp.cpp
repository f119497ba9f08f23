#include "pm/numsgp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "pm/errors.hpp"

namespace pm {

void SearchBudget::consume(std::uint64_t nodes) {
    if (nodes > remaining_) {
        remaining_ = 0;
        throw BudgetExhausted();
    }
    remaining_ -= nodes;
}

namespace {

Integer gcd_all(std::span<const Integer> values) {
    Integer g = 0;
    for (const Integer& v : values) g = gcd(g, v);
    return g;
}

struct AperyTable {
    std::vector<std::uint64_t> dist;
    // Index into the generator list of the last step on a shortest path.
    std::vector<std::int32_t> via;
};

// Shortest paths over residues mod m; gens must have gcd 1 and include m.
AperyTable apery_table(std::span<const std::uint64_t> gens, std::uint64_t m, SearchBudget* budget) {
    if (m > kTableCap) throw ResourceError("Apery set modulus exceeds table cap");
    std::uint64_t max_gen = *std::max_element(gens.begin(), gens.end());
    if (max_gen > std::numeric_limits<std::uint64_t>::max() / (m + 1))
        throw ResourceError("Apery set distances overflow 64-bit range");
    if (budget) budget->consume(m * gens.size());

    constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
    AperyTable t{std::vector<std::uint64_t>(m, kInf), std::vector<std::int32_t>(m, -1)};
    using Node = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    t.dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != t.dist[r]) continue;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::uint64_t next = (r + gens[i]) % m;
            std::uint64_t nd = d + gens[i];
            if (nd < t.dist[next]) {
                t.dist[next] = nd;
                t.via[next] = static_cast<std::int32_t>(i);
                queue.emplace(nd, next);
            }
        }
    }
    return t;
}

std::vector<std::uint64_t> to_words(std::span<const Integer> values, const char* what) {
    std::vector<std::uint64_t> out;
    out.reserve(values.size());
    for (const Integer& v : values) {
        if (!v.fits_ulong_p()) throw ResourceError(std::string(what) + " exceeds 64-bit range");
        out.push_back(v.get_ui());
    }
    return out;
}

// Lexicographically greatest multiplicities for target u over reduced gens
// (priority order), via one reachability table per generator suffix.
std::optional<std::vector<std::uint64_t>> greedy_by_table(std::span<const std::uint64_t> gens,
                                                          std::uint64_t u, SearchBudget* budget) {
    const std::size_t k = gens.size();
    if (budget) budget->consume((u + 1) * k);
    std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(u + 1, false));
    reach[k][0] = true;
    for (std::size_t j = k; j-- > 0;) {
        auto& cur = reach[j];
        const auto& next = reach[j + 1];
        const std::uint64_t h = gens[j];
        for (std::uint64_t v = 0; v <= u; ++v) cur[v] = next[v] || (v >= h && cur[v - h]);
    }
    if (!reach[0][u]) return std::nullopt;

    std::vector<std::uint64_t> mult(k, 0);
    std::uint64_t rem = u;
    for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t h = gens[j];
        for (std::uint64_t c = rem / h + 1; c-- > 0;) {
            if (reach[j + 1][rem - c * h]) {
                mult[j] = c;
                rem -= c * h;
                break;
            }
        }
    }
    return mult;
}

std::optional<std::vector<Integer>> represent_by_apery(std::span<const std::uint64_t> gens,
                                                       const Integer& u, SearchBudget* budget) {
    std::size_t min_idx = static_cast<std::size_t>(
        std::min_element(gens.begin(), gens.end()) - gens.begin());
    std::uint64_t m = gens[min_idx];
    AperyTable table = apery_table(gens, m, budget);
    Integer residue_z = u % to_integer(m);
    std::uint64_t residue = residue_z.get_ui();
    Integer w = to_integer(table.dist[residue]);
    if (u < w) return std::nullopt;

    std::vector<Integer> mult(gens.size(), 0);
    for (std::uint64_t r = residue; r != 0;) {
        std::size_t i = static_cast<std::size_t>(table.via[r]);
        mult[i] += 1;
        r = (r + m - gens[i] % m) % m;
    }
    Integer extra = (u - w) / to_integer(m);
    mult[min_idx] += extra;
    return mult;
}

}  // namespace

NumericalSemigroup ns_from_integers(std::vector<Integer> generators) {
    if (generators.empty()) throw ArgumentError("numerical semigroup needs at least one generator");
    for (const Integer& g : generators)
        if (g <= 0) throw ArgumentError("numerical semigroup generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    NumericalSemigroup s;
    s.content_ = gcd_all(generators);
    s.reduced_.reserve(generators.size());
    for (const Integer& g : generators) s.reduced_.push_back(g / s.content_);
    s.generators_ = std::move(generators);
    return s;
}

NumericalSemigroup ns_from_rationals(std::span<const Rat> generators) {
    if (generators.empty()) throw ArgumentError("numerical semigroup needs at least one generator");
    for (const Rat& r : generators)
        if (r.is_zero()) throw ArgumentError("numerical semigroup generators must be positive");
    Integer scale = lcm_denominators(generators);
    std::vector<Integer> ints;
    ints.reserve(generators.size());
    for (const Rat& r : generators) ints.push_back(r.num() * (scale / r.den()));
    NumericalSemigroup s = ns_from_integers(std::move(ints));
    s.scale_ = std::move(scale);
    return s;
}

NumericalSemigroup NumericalSemigroup::reduced() const { return ns_from_integers(reduced_); }

std::optional<Integer> scaled_target(const NumericalSemigroup& s, const Rat& x) {
    Integer scale = s.scale().value_or(Integer(1));
    Integer prod = scale * x.num();
    if (!mpz_divisible_p(prod.get_mpz_t(), x.den().get_mpz_t())) return std::nullopt;
    return Integer(prod / x.den());
}

std::optional<std::vector<Integer>> represent_in_order(std::span<const Integer> generators,
                                                       const Integer& t, SearchBudget* budget) {
    if (t < 0) throw ArgumentError("negative membership target");
    std::vector<Integer> out(generators.size(), 0);
    if (t == 0) return out;

    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] <= 0) throw ArgumentError("generators must be positive");
        if (generators[i] <= t) usable.push_back(i);
    }
    if (usable.empty()) return std::nullopt;

    Integer content = 0;
    for (std::size_t i : usable) content = gcd(content, generators[i]);
    if (!mpz_divisible_p(t.get_mpz_t(), content.get_mpz_t())) return std::nullopt;
    Integer u = t / content;

    std::vector<Integer> reduced_z;
    reduced_z.reserve(usable.size());
    for (std::size_t i : usable) reduced_z.push_back(generators[i] / content);

    if (u <= to_integer(kTableCap)) {
        auto reduced = to_words(reduced_z, "generator");
        auto mult = greedy_by_table(reduced, u.get_ui(), budget);
        if (!mult) return std::nullopt;
        for (std::size_t j = 0; j < usable.size(); ++j) out[usable[j]] = to_integer((*mult)[j]);
        return out;
    }

    auto reduced = to_words(reduced_z, "generator");
    auto mult = represent_by_apery(reduced, u, budget);
    if (!mult) return std::nullopt;
    for (std::size_t j = 0; j < usable.size(); ++j) out[usable[j]] = (*mult)[j];
    return out;
}

Containment ns_contains(const NumericalSemigroup& s, const Integer& t, SearchBudget* budget) {
    std::vector<Integer> largest_first(s.generators().rbegin(), s.generators().rend());
    auto mult = represent_in_order(largest_first, t, budget);
    if (!mult) return {};
    Representation rep;
    for (std::size_t i = 0; i < largest_first.size(); ++i)
        if ((*mult)[i] > 0) rep[largest_first[i]] = (*mult)[i];
    return {true, std::move(rep)};
}

std::vector<Integer> ns_apery(const NumericalSemigroup& s, const Integer& m) {
    if (s.content() != 1) throw ArgumentError("Apery set requires content 1; use the reduced form");
    if (m <= 0 || !ns_contains(s, m).member)
        throw ArgumentError("Apery modulus " + m.get_str() + " is not an element of the semigroup");
    if (m > to_integer(kTableCap)) throw ResourceError("Apery set modulus exceeds table cap");
    auto gens = to_words(s.generators(), "generator");
    std::uint64_t mw = m.get_ui();
    gens.push_back(mw);
    AperyTable table = apery_table(gens, mw, nullptr);
    std::vector<Integer> out;
    out.reserve(mw);
    for (std::uint64_t d : table.dist) out.push_back(to_integer(d));
    return out;
}

std::optional<Integer> ns_frobenius(const NumericalSemigroup& s) {
    if (s.content() != 1) return std::nullopt;
    const Integer& m = s.multiplicity();
    if (m == 1) return Integer(-1);
    auto apery = ns_apery(s, m);
    return *std::max_element(apery.begin(), apery.end()) - m;
}

std::vector<Integer> ns_minimal_generators(const NumericalSemigroup& s) {
    std::vector<Integer> minimal;
    for (const Integer& g : s.generators()) {
        if (!represent_in_order(minimal, g)) minimal.push_back(g);
    }
    return minimal;
}

Integer ns_genus(const NumericalSemigroup& s) {
    if (s.content() != 1) throw ArgumentError("genus requires content 1 (the complement is infinite)");
    const Integer& m = s.multiplicity();
    auto apery = ns_apery(s, m);
    Integer sum = 0;
    for (const Integer& w : apery) sum += w;
    // sum/m - (m-1)/2, kept integral.
    return (2 * sum - m * (m - 1)) / (2 * m);
}

}  // namespace pm
