#include "pm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pm/descriptors.hpp"
#include "pm/engine.hpp"
#include "pm/errors.hpp"
#include "pm/numsgp.hpp"
#include "pm/witnesses.hpp"

namespace pm {

namespace {

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.total;
        if (ok)
            ++result_.passed;
        else if (!result_.counterexample)
            result_.counterexample = describe();
    }

    void detail(std::string line) { result_.details.push_back(std::move(line)); }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string join(std::span<const Rat> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].to_string();
    }
    return out + "]";
}

bool in_finite(std::vector<Rat> pool, const Rat& x) {
    if (x.is_zero()) return true;
    if (pool.empty()) return false;
    return member(MonoidDescriptor::finite(std::move(pool)), x).is_in();
}

// x in <pool \ {x}>, pool elements above x left out.
bool reached_by_others(std::span<const Rat> pool, const Rat& x) {
    std::vector<Rat> others;
    for (const Rat& g : pool)
        if (g != x && g <= x) others.push_back(g);
    return in_finite(std::move(others), x);
}

std::vector<Rat> random_distinct_sorted(std::mt19937_64& rng, std::size_t len, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::set<Rat> values;
    while (values.size() < len) values.insert(Rat(num(rng), den(rng)));
    return {values.begin(), values.end()};
}

// ---------------------------------------------------------------------------

SuiteResult suite_geometric(const VerifyOptions& o) {
    std::vector<Rat> ratios{Rat(2), Rat(5), Rat(1, 2), Rat(1, 5), Rat(2, 3), Rat(3, 2), Rat(5, 4), Rat(4, 5)};
    if (o.ratio) ratios = {*o.ratio};
    const std::size_t prefix = o.depth.value_or(8);
    const std::size_t window = prefix + 4;

    SuiteResult s{"thm6.2", {}};
    for (const Rat& r : ratios) {
        Tally t("r=" + r.to_string());
        const auto d = MonoidDescriptor::geometric(r);
        AtomReport report = atoms(d, Truncation(prefix));
        std::vector<Rat> gens = generators_up_to(d, Truncation(prefix));

        std::vector<Rat> expected;
        bool expect_antimatter = false;
        if (r.den() == 1)
            expected = {Rat(r.num())};
        else if (r.num() == 1)
            expect_antimatter = true;
        else
            expected = gens;
        t.expect(report.atoms == expected && report.antimatter == expect_antimatter,
                 [&] { return "closed form gave " + join(report.atoms); });

        std::vector<Rat> oracle;
        if (r >= Rat(1)) {
            oracle = brute_force_atoms(gens);
        } else {
            // Decreasing: a truncated atom must stay irreducible with more
            // generators available.
            std::vector<Rat> wide = generators_up_to(d, Truncation(window));
            for (const Rat& g : gens)
                if (!reached_by_others(wide, g)) oracle.push_back(g);
            std::sort(oracle.begin(), oracle.end());
        }
        std::vector<Rat> claimed = report.atoms;
        std::sort(claimed.begin(), claimed.end());
        t.expect(claimed == oracle, [&] { return "oracle gave " + join(oracle); });
        t.detail("atoms " + join(report.atoms) + (report.antimatter ? " (antimatter)" : ""));
        s.checks.push_back(t.done());
    }
    return s;
}

SuiteResult suite_increasing_filter(const VerifyOptions& o) {
    const std::size_t trials = o.trials.value_or(200);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    Tally t("filter = brute force");
    for (std::size_t i = 0; i < trials; ++i) {
        auto list = random_distinct_sorted(rng, len(rng), 20, 12);
        auto filtered = increasing_filter(list);
        auto brute = brute_force_atoms(list);
        t.expect(filtered == brute, [&] {
            return join(list) + ": filter " + join(filtered) + " vs brute " + join(brute);
        });
    }
    return {"prop3.2", {t.done()}};
}

SuiteResult suite_primary(const VerifyOptions&) {
    const std::vector<std::uint64_t> base{2, 3, 5, 7, 11};
    std::vector<int> divisors;
    for (int d = 1; d <= 2310; ++d)
        if (2310 % d == 0) divisors.push_back(d);
    Tally t("closed form = table");
    Tally exact("never unknown");
    for (unsigned mask = 1; mask < 32; ++mask) {
        std::vector<std::uint64_t> chosen;
        std::vector<Rat> gens;
        for (unsigned i = 0; i < base.size(); ++i)
            if (mask & (1u << i)) {
                chosen.push_back(base[i]);
                gens.push_back(Rat(Integer(1), to_integer(base[i])));
            }
        const auto d = MonoidDescriptor::primary(PrimeStream::explicit_list(chosen));
        const NumericalSemigroup ns = ns_from_rationals(gens);
        for (int den : divisors)
            for (int n = 0; n <= 60; ++n) {
                Rat x(n, den);
                MembershipVerdict v = member(d, x);
                auto target = scaled_target(ns, x);
                bool oracle = target && ns_contains(ns, *target).member;
                exact.expect(!v.is_unknown(), [&] { return x.to_string() + " over " + join(gens); });
                t.expect(v.is_in() == oracle, [&] {
                    return x.to_string() + " over " + join(gens) + ": closed form " + (v.is_in() ? "In" : "NotIn");
                });
            }
    }
    return {"thm5.9", {t.done(), exact.done()}};
}

SuiteResult suite_scaling(const VerifyOptions& o) {
    const std::size_t trials = o.trials.value_or(500);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    std::bernoulli_distribution on_lattice(0.5);
    Tally t("member = scaled ns_contains");
    for (std::size_t i = 0; i < trials; ++i) {
        auto gens = random_distinct_sorted(rng, len(rng), 20, 12);
        const NumericalSemigroup ns = ns_from_rationals(gens);
        const Integer& scale = *ns.scale();
        Rat x;
        if (on_lattice(rng)) {
            Integer top = 3 * gens.back().num() * (scale / gens.back().den());
            std::uniform_int_distribution<unsigned long> pick(0, top.get_ui());
            x = Rat(to_integer(pick(rng)), scale);
        } else {
            std::uniform_int_distribution<int> num(0, 60), den(1, 24);
            x = Rat(num(rng), den(rng));
        }
        MembershipVerdict v = member(MonoidDescriptor::finite(gens), x);
        auto target = scaled_target(ns, x);
        bool expected = target && ns_contains(ns, *target).member;
        t.expect(!v.is_unknown() && v.is_in() == expected,
                 [&] { return x.to_string() + " over " + join(gens); });
    }
    return {"lemma3.3", {t.done()}};
}

void check_semigroup(Tally& t, const std::vector<Integer>& gens) {
    const NumericalSemigroup s = ns_from_integers(gens);
    std::string label = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + gens[i].get_str();
    label += ">";
    const Integer& m = s.multiplicity();
    auto apery = ns_apery(s, m);
    t.expect(Integer(static_cast<unsigned long>(apery.size())) == m, [&] { return label + ": |Apery| != m"; });
    Integer f = *ns_frobenius(s);
    t.expect(f == *std::max_element(apery.begin(), apery.end()) - m, [&] { return label + ": Frobenius"; });
    Integer gaps = 0;
    for (Integer x = 0; x <= f; ++x)
        if (!ns_contains(s, x).member) ++gaps;
    t.expect(ns_genus(s) == gaps, [&] { return label + ": genus " + ns_genus(s).get_str() + " vs " + gaps.get_str(); });
    bool tail = true;
    for (Integer x = f + 1; x <= f + 2 * m; ++x) tail = tail && ns_contains(s, x).member;
    t.expect(tail, [&] { return label + ": gap above Frobenius"; });
}

SuiteResult suite_numerical_semigroups(const VerifyOptions& o) {
    const std::size_t trials = o.trials.value_or(100);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> count(1, 5), value(1, 50);
    Tally random("random content-1 sets");
    for (std::size_t i = 0; i < trials; ++i) {
        std::vector<Integer> gens;
        Integer g = 0;
        do {
            gens.clear();
            g = 0;
            int k = count(rng);
            for (int j = 0; j < k; ++j) {
                gens.push_back(Integer(value(rng)));
                g = gcd(g, gens.back());
            }
        } while (g != 1);
        check_semigroup(random, gens);
    }

    Tally fixed("fixed cases");
    const NumericalSemigroup s35 = ns_from_integers({Integer(3), Integer(5)});
    fixed.expect(*ns_frobenius(s35) == 7, [] { return std::string("<3,5> Frobenius"); });
    fixed.expect(ns_genus(s35) == 4, [] { return std::string("<3,5> genus"); });
    fixed.expect(ns_apery(s35, Integer(3)) == std::vector<Integer>{0, 10, 5}, [] { return std::string("<3,5> Apery"); });
    const NumericalSemigroup mc = ns_from_integers({Integer(6), Integer(9), Integer(20)});
    fixed.expect(*ns_frobenius(mc) == 43, [] { return std::string("<6,9,20> Frobenius"); });
    check_semigroup(fixed, {Integer(3), Integer(5)});
    check_semigroup(fixed, {Integer(6), Integer(9), Integer(20)});
    return {"ns", {random.done(), fixed.done()}};
}

SuiteResult suite_partial_sums(const VerifyOptions& o) {
    const std::size_t n = o.count.value_or(6);
    Tally w("first " + std::to_string(n) + " partial sums are atoms");
    WitnessReport report = witness_partial_sums(PrimeStream::all(), n);
    w.expect(report.verified(), [&] { return std::get<witness::FailedAt>(report.verdict).detail; });
    Integer scale = lcm_denominators(report.generators);
    w.detail("scale " + scale.get_str());
    auto brute = brute_force_atoms(report.generators);
    w.expect(brute == report.generators, [&] { return "brute force kept " + join(brute); });
    if (n == 6) w.expect(scale == 30030, [&] { return "scale " + scale.get_str(); });

    Tally probe("unboundedness probe");
    auto gens = generators_up_to(MonoidDescriptor::partial_sums_primary(PrimeStream::all()), Truncation(100));
    auto over = std::find_if(gens.begin(), gens.end(), [](const Rat& a) { return a > Rat(2); });
    probe.expect(std::is_sorted(gens.begin(), gens.end()) &&
                     std::adjacent_find(gens.begin(), gens.end()) == gens.end(),
                 [] { return std::string("partial sums not strictly increasing"); });
    probe.expect(over != gens.end(), [] { return std::string("a_n <= 2 for all n <= 100"); });
    if (over != gens.end()) probe.detail("a_n > 2 first at n = " + std::to_string(over - gens.begin() + 1));
    return {"prop5.4", {w.done(), probe.done()}};
}

SuiteResult suite_mertens(const VerifyOptions& o) {
    Tally t("offsets within 0.05");
    const auto stream = PrimeStream::progression(o.residue, o.modulus);
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t c : {o.x / 100, o.x / 10, o.x})
        if (c >= 3 && (checkpoints.empty() || c > checkpoints.back())) checkpoints.push_back(c);

    auto started = std::chrono::steady_clock::now();
    sieve_primes(o.x);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    t.expect(seconds < 5.0, [&] { return "sieve took " + std::to_string(seconds) + " s"; });

    SubstantialityReport report = is_substantial(stream, checkpoints);
    t.expect(report.verdict == Substantiality::Substantial, [] { return std::string("not substantial"); });
    for (const auto& [x, offset] : report.mertens_offsets) {
        std::ostringstream line;
        line.precision(6);
        line << std::fixed << "x=" << x << " offset=" << offset << " (approximate)";
        t.detail(line.str());
    }
    const auto& offs = report.mertens_offsets;
    for (std::size_t i = 0; i < offs.size(); ++i)
        for (std::size_t j = i + 1; j < offs.size(); ++j)
            t.expect(std::abs(offs[i].second - offs[j].second) < 0.05, [&] {
                return "x=" + std::to_string(offs[i].first) + " vs x=" + std::to_string(offs[j].first);
            });
    return {"eq5.3", {t.done()}};
}

SuiteResult suite_geo_psums(const VerifyOptions& o) {
    const std::size_t n = o.count.value_or(20);
    const auto d = MonoidDescriptor::geometric_partial_sums(Rat(1, 2));
    auto gens = generators_up_to(d, Truncation(n));
    Tally form("closed form and bounds");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Integer p = Integer(1) << static_cast<mp_bitcnt_t>(i + 1);
        form.expect(gens[i] == Rat(p - 1, p) && gens[i] < Rat(1),
                    [&] { return "n=" + std::to_string(i + 1) + ": " + gens[i].to_string(); });
        for (std::size_t j = i; j < gens.size(); ++j)
            form.expect(gens[i] + gens[j] >= Rat(1), [&] { return "pair " + std::to_string(i + 1); });
    }
    WitnessReport w = witness_geo_psums(Rat(1, 2), n);
    form.expect(w.verified(), [] { return std::string("witness not verified"); });

    Tally oracle("oracle for n <= 8");
    const std::size_t small = std::min<std::size_t>(8, n);
    std::vector<Rat> head(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(small));
    oracle.expect(brute_force_atoms(head) == head, [&] { return "brute force dropped a generator"; });
    oracle.expect(atoms(d, Truncation(small)).atoms == head, [] { return std::string("atoms() differs"); });
    return {"ex6.4", {form.done(), oracle.done()}};
}

SuiteResult suite_unbounded(const VerifyOptions& o) {
    const Rat r = o.ratio.value_or(Rat(2, 3));
    const std::size_t n = o.count.value_or(12);
    Tally t("r=" + r.to_string() + ", n <= " + std::to_string(n));
    WitnessReport w = witness_unbounded_geo(r, n);
    t.expect(w.verified(), [&] { return std::get<witness::FailedAt>(w.verdict).detail; });
    const Integer& a = r.num();
    const Integer& b = r.den();
    auto primes_of_b = factorize(b);
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
        const Rat& s = w.generators[i];
        const long k = static_cast<long>(i + 1);
        Rat bn = pow(Rat(b), static_cast<unsigned long>(k));
        Rat an = pow(Rat(a), static_cast<unsigned long>(k));
        t.expect(s == (Rat(k) * bn + Rat(1)) * an / bn, [&] { return "s_" + std::to_string(k) + " formula"; });
        t.expect(s > Rat(k), [&] { return "s_" + std::to_string(k) + " <= n"; });
        if (i > 0) t.expect(w.generators[i - 1] < s, [&] { return "not increasing at " + std::to_string(k); });
        for (const auto& [p, e] : primes_of_b)
            t.expect(padic_val(p, s) == -k * padic_val(p, b), [&] { return "valuation of s_" + std::to_string(k); });
        std::vector<Rat> before(w.generators.begin(), w.generators.begin() + static_cast<std::ptrdiff_t>(i));
        t.expect(!in_finite(before, s), [&] { return "s_" + std::to_string(k) + " reached by earlier terms"; });
    }
    return {"prop6.5", {t.done()}};
}

SuiteResult suite_antimatter(const VerifyOptions& o) {
    const std::size_t depth = o.depth.value_or(12);
    std::vector<Integer> bases{Integer(2), Integer(3), Integer(10)};
    if (o.ratio && o.ratio->num() == 1) bases = {o.ratio->den()};
    SuiteResult s{"antimatter", {}};
    for (const Integer& b : bases) {
        Tally t("b=" + b.get_str());
        const auto d = MonoidDescriptor::geometric(Rat(Integer(1), b));
        auto gens = generators_up_to(d, Truncation(depth + 1));
        for (std::size_t i = 0; i < depth; ++i) {
            t.expect(gens[i] == b * gens[i + 1], [&] { return "g_" + std::to_string(i + 1) + " != b g_{n+1}"; });
            t.expect(member(d, gens[i] - gens[i + 1]).is_in(),
                     [&] { return "g_" + std::to_string(i + 1) + " - g_{n+1} not in M"; });
        }
        AtomReport report = atoms(d, Truncation(depth));
        t.expect(report.atoms.empty() && report.antimatter, [] { return std::string("atoms not empty"); });
        s.checks.push_back(t.done());
    }
    return s;
}

SuiteResult suite_support(const VerifyOptions& o) {
    const std::size_t trials = o.trials.value_or(200);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> count(1, 5), num(1, 30), den(1, 60), which(0, 3);
    const std::vector<PrimeStream> streams{PrimeStream::all(), PrimeStream::progression(1, 4),
                                           PrimeStream::progression(3, 4), PrimeStream::explicit_list({2, 3, 5, 7})};
    Tally t("D_P(sum) within the union");
    for (std::size_t i = 0; i < trials; ++i) {
        const PrimeStream& p = streams[static_cast<std::size_t>(which(rng))];
        std::vector<Rat> parts;
        int k = count(rng);
        Rat sum;
        for (int j = 0; j < k; ++j) {
            parts.push_back(Rat(num(rng), den(rng)));
            sum += parts.back();
        }
        auto whole = dp_support(sum, p);
        auto pieces = dp_support(parts, p);
        t.expect(std::includes(pieces.begin(), pieces.end(), whole.begin(), whole.end()),
                 [&] { return join(parts) + " over " + to_string(p); });
    }
    return {"lemma5.8", {t.done()}};
}

using Suite = std::function<SuiteResult(const VerifyOptions&)>;

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table{
        {"thm6.2", suite_geometric},        {"prop3.2", suite_increasing_filter},
        {"thm5.9", suite_primary},          {"lemma3.3", suite_scaling},
        {"ns", suite_numerical_semigroups}, {"prop5.4", suite_partial_sums},
        {"eq5.3", suite_mertens},           {"ex6.4", suite_geo_psums},
        {"prop6.5", suite_unbounded},       {"antimatter", suite_antimatter},
        {"lemma5.8", suite_support},
    };
    return table;
}

}  // namespace

bool SuiteResult::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

const std::vector<std::string>& verify_tags() {
    static const std::vector<std::string> tags{"thm6.2", "prop3.2", "thm5.9",  "lemma3.3",   "ns",      "prop5.4",
                                               "eq5.3",  "ex6.4",   "prop6.5", "antimatter", "lemma5.8"};
    return tags;
}

bool is_verify_tag(const std::string& tag) { return suites().contains(tag); }

SuiteResult run_suite(const std::string& tag, const VerifyOptions& options) {
    auto it = suites().find(tag);
    if (it == suites().end()) throw ArgumentError("unknown verify suite: " + tag);
    return it->second(options);
}

}  // namespace pm
