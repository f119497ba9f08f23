#include "pm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pm/citations.hpp"
#include "pm/descriptors.hpp"
#include "pm/engine.hpp"
#include "pm/errors.hpp"
#include "pm/numsgp.hpp"
#include "pm/verify.hpp"
#include "pm/witnesses.hpp"

namespace pm::cli {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t depth = kDefaultDepth;
    std::string format = "text";
    std::uint64_t seed = VerifyOptions{}.seed;
    std::uint64_t budget = kDefaultBudget;
    std::string emit;

    std::string descriptor;
    std::string value;
    std::string name;
    std::string primes = "all";
    std::string of;
    std::string ratio;
    std::optional<std::size_t> n;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> x;
    std::string scale = "desk";
    std::vector<std::uint64_t> checkpoints;
    std::string contains;
};

struct Report {
    Report() = default;
    Report(std::string verb_, Json input_, std::string verdict_ = {})
        : verb(std::move(verb_)), input(std::move(input_)), verdict(std::move(verdict_)) {}

    std::string verb;
    Json input = Json::object();
    std::string verdict;
    std::vector<std::string> citations;
    Json data = Json::object();
    std::vector<std::string> lines;
    int code = kExitOk;
};

std::string list(std::span<const Rat> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].to_string();
    return out + "]";
}

Json json_list(std::span<const Rat> values) {
    Json out = Json::array();
    for (const Rat& r : values) out.push_back(r.to_string());
    return out;
}

void add_citation(Report& r, const std::string& tag) {
    if (std::find(r.citations.begin(), r.citations.end(), tag) == r.citations.end()) r.citations.push_back(tag);
}

Rat parse_value(const std::string& text) {
    std::string_view v(text);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return parse_rat(v);
}

// Structured form: kind tag, the parameter text after the colon, and the
// full grammar string.
Json descriptor_json(const MonoidDescriptor& d) {
    std::string text = serialize_descriptor(d);
    auto colon = text.find(':');
    std::string params = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    return {{"kind", kind_name(d)}, {"params", params}, {"text", text}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

Report run_classify(const Options& o) {
    const MonoidDescriptor d = parse_descriptor(o.descriptor);
    StructureReport s = classify(d);
    Report r{"classify", {{"descriptor", descriptor_json(d)}}, "classified"};
    auto source = [&](const std::string& flag) {
        for (const Citation& c : s.citations)
            if (c.flag == flag) return c.source;
        return std::string();
    };
    auto line = [&](const std::string& flag, const std::string& value) {
        std::string src = source(flag);
        r.lines.push_back(flag + ": " + value + (src.empty() ? "" : "  [" + src + "]"));
    };
    line("finitely_generated", yes_no(s.is_finitely_generated));
    line("iso_to_numerical_semigroup", yes_no(s.iso_to_numerical_semigroup));
    line("monotone_class", to_string(s.monotone_class));
    line("bounded", yes_no(s.bounded));
    line("strongly_bounded", yes_no(s.strongly_bounded));
    line("atomicity", to_string(s.atomicity));
    for (const std::string& note : s.notes) r.lines.push_back("note: " + note);

    Json flags = Json::object();
    for (const Citation& c : s.citations) {
        add_citation(r, c.source);
        flags[c.flag] = c.source;
    }
    std::string all;
    for (const std::string& c : r.citations) all += (all.empty() ? "" : ", ") + c;
    r.lines.push_back("citations: [" + all + "]");
    r.data = {{"is_finitely_generated", s.is_finitely_generated},
              {"iso_to_numerical_semigroup", s.iso_to_numerical_semigroup},
              {"monotone_class", to_string(s.monotone_class)},
              {"bounded", s.bounded},
              {"strongly_bounded", s.strongly_bounded},
              {"atomicity", to_string(s.atomicity)},
              {"flag_citations", flags},
              {"notes", s.notes}};
    return r;
}

std::string describe(const verdict::Refutation& reason) {
    return std::visit(overloaded{
                          [](const verdict::BelowMinimum&) { return std::string("below the smallest generator"); },
                          [](const verdict::ValuationObstruction& v) {
                              return "valuation obstruction at p=" + v.prime.get_str();
                          },
                          [](const verdict::DenominatorObstruction&) { return std::string("denominator obstruction"); },
                          [](const verdict::ExhaustiveRefutation&) { return std::string("exhaustive refutation"); },
                      },
                      reason);
}

std::string reason_tag(const verdict::Refutation& reason) {
    return std::visit(overloaded{
                          [](const verdict::BelowMinimum&) { return "BelowMinimum"; },
                          [](const verdict::ValuationObstruction&) { return "ValuationObstruction"; },
                          [](const verdict::DenominatorObstruction&) { return "DenominatorObstruction"; },
                          [](const verdict::ExhaustiveRefutation&) { return "ExhaustiveRefutation"; },
                      },
                      reason);
}

Report run_member(const Options& o) {
    const MonoidDescriptor d = parse_descriptor(o.descriptor);
    const Rat x = parse_value(o.value);
    MembershipVerdict v = member(d, x, Truncation(o.depth), o.budget);
    Report r{"member",
             {{"descriptor", descriptor_json(d)},
              {"value", x.to_string()},
              {"depth", o.depth},
              {"budget", o.budget}}};
    std::visit(overloaded{
                   [&](const verdict::In& in) {
                       r.verdict = "In";
                       std::string sum;
                       Json terms = Json::array();
                       for (const Term& t : in.terms) {
                           if (!sum.empty()) sum += " + ";
                           sum += t.multiplicity == 1 ? t.generator.to_string()
                                                      : t.multiplicity.get_str() + "*(" + t.generator.to_string() + ")";
                           terms.push_back({{"index", t.index},
                                            {"generator", t.generator.to_string()},
                                            {"multiplicity", t.multiplicity.get_str()}});
                       }
                       r.lines.push_back("In: " + (sum.empty() ? std::string("0") : sum));
                       r.data = {{"terms", terms}, {"depth", in.depth}};
                   },
                   [&](const verdict::NotIn& out) {
                       r.verdict = "NotIn";
                       r.code = kExitNegative;
                       r.lines.push_back("NotIn: " + describe(out.reason));
                       r.data = {{"reason", reason_tag(out.reason)}};
                       if (const auto* val = std::get_if<verdict::ValuationObstruction>(&out.reason))
                           r.data["prime"] = val->prime.get_str();
                   },
                   [&](const verdict::UnknownAtDepth& u) {
                       r.verdict = "UnknownAtDepth";
                       r.code = kExitUnknown;
                       r.lines.push_back("Unknown at depth " + std::to_string(u.depth));
                       r.data = {{"depth", u.depth}};
                   },
               },
               v.status);
    return r;
}

Report run_atoms(const Options& o) {
    const MonoidDescriptor d = parse_descriptor(o.descriptor);
    AtomReport a = atoms(d, Truncation(o.depth));
    Report r{"atoms", {{"descriptor", descriptor_json(d)}, {"depth", o.depth}}, "atoms"};
    r.lines.push_back("atoms: " + list(a.atoms));
    std::visit(overloaded{
                   [&](const exactness::ClosedForm& c) {
                       r.lines.push_back("exactness: closed form [" + c.source + "]");
                       r.data["exactness"] = "ClosedForm";
                       r.data["source"] = c.source;
                       add_citation(r, c.source);
                   },
                   [&](const exactness::ExactByIncreasingFilter&) {
                       r.lines.push_back("exactness: exact by increasing filter [" + std::string(cite::kIncreasingAtomic) + "]");
                       r.data["exactness"] = "ExactByIncreasingFilter";
                       add_citation(r, cite::kIncreasingAtomic);
                   },
                   [&](const exactness::TruncatedAtDepth& t) {
                       r.lines.push_back("exactness: truncated at depth " + std::to_string(t.depth));
                       r.data["exactness"] = "TruncatedAtDepth";
                       r.data["truncation"] = t.depth;
                   },
               },
               a.exactness);
    r.lines.push_back(std::string("antimatter: ") + yes_no(a.antimatter));
    r.data["atoms"] = json_list(a.atoms);
    r.data["antimatter"] = a.antimatter;
    return r;
}

std::size_t require_n(const Options& o) {
    if (!o.n) throw UsageError("witness " + o.name + " needs --n");
    return *o.n;
}

Rat require_ratio(const Options& o) {
    if (o.ratio.empty()) throw UsageError("witness " + o.name + " needs --r");
    return parse_value(o.ratio);
}

MonoidDescriptor require_of(const Options& o) {
    if (o.of.empty()) throw UsageError("witness " + o.name + " needs --of");
    return parse_descriptor(o.of);
}

Report run_witness(const Options& o, bool depth_given) {
    std::optional<std::size_t> depth;
    if (depth_given) depth = o.depth;
    Report r{"witness", {{"construction", o.name}}};
    WitnessReport w;
    if (o.name == "psums") {
        PrimeStream p = parse_prime_stream(o.primes);
        r.input["primes"] = to_string(p);
        w = witness_partial_sums(p, require_n(o), depth);
    } else if (o.name == "example-ab") {
        w = witness_example_ab(require_n(o), depth);
    } else if (o.name == "infinite-atoms") {
        MonoidDescriptor d = require_of(o);
        r.input["of"] = descriptor_json(d);
        w = witness_infinite_atoms(d, require_n(o), depth);
    } else if (o.name == "non-monotone") {
        MonoidDescriptor d = require_of(o);
        r.input["of"] = descriptor_json(d);
        w = witness_non_monotone_submonoid(d, require_n(o));
    } else if (o.name == "geo-psums") {
        Rat ratio = require_ratio(o);
        r.input["r"] = ratio.to_string();
        w = witness_geo_psums(ratio, require_n(o), depth);
    } else if (o.name == "unbounded-geo") {
        Rat ratio = require_ratio(o);
        r.input["r"] = ratio.to_string();
        w = witness_unbounded_geo(ratio, require_n(o), depth);
    } else {
        throw UsageError("unknown witness construction: " + o.name +
                         " (psums, example-ab, infinite-atoms, non-monotone, geo-psums, unbounded-geo)");
    }
    if (o.n) r.input["n"] = *o.n;

    add_citation(r, w.provenance);
    r.lines.push_back("construction: " + w.construction);
    r.lines.push_back("generators: " + list(w.generators));
    r.lines.push_back("claimed atoms: " + list(w.claimed_atoms));
    r.lines.push_back("verified depth: " + std::to_string(w.verified_depth));
    r.data = {{"generators", json_list(w.generators)},
              {"claimed_atoms", json_list(w.claimed_atoms)},
              {"verified_depth", w.verified_depth},
              {"provenance", w.provenance},
              {"notes", w.notes}};
    if (const auto* f = std::get_if<witness::FailedAt>(&w.verdict)) {
        r.verdict = "FailedAt";
        r.code = kExitNegative;
        r.lines.push_back("verdict: FailedAt(" + std::to_string(f->index) + "): " + f->detail);
        r.data["failed_at"] = {{"index", f->index}, {"detail", f->detail}};
    } else {
        r.verdict = "Verified";
        r.lines.push_back("verdict: Verified");
    }
    r.lines.push_back("provenance: " + w.provenance);
    for (const std::string& note : w.notes) r.lines.push_back("note: " + note);

    if (!o.emit.empty()) {
        if (w.generators.empty()) throw UsageError("--emit: the witness has no generators");
        std::ofstream file(o.emit);
        if (!file) throw UsageError("--emit: cannot open " + o.emit);
        std::string text = serialize_descriptor(MonoidDescriptor::finite(w.generators));
        file << text << '\n';
        r.lines.push_back("emitted: " + o.emit);
        r.data["emitted"] = text;
    }
    return r;
}

Report run_verify(const Options& o, bool depth_given) {
    if (o.scale != "desk") throw UsageError("unknown verify scale: " + o.scale + " (desk)");
    const std::string& tag = o.name;
    if (tag != "all" && !is_verify_tag(tag)) {
        std::string known = "all";
        for (const std::string& t : verify_tags()) known += ", " + t;
        throw UsageError("unknown verify suite: " + tag + " (" + known + ")");
    }
    VerifyOptions v;
    v.seed = o.seed;
    if (depth_given) v.depth = o.depth;
    if (!o.ratio.empty()) v.ratio = parse_value(o.ratio);
    v.trials = o.trials;
    if (tag == "eq5.3") {
        if (o.n) v.modulus = *o.n;
        if (o.m) v.residue = *o.m;
    } else {
        v.count = o.n;
    }
    if (o.x) v.x = *o.x;

    Report r{"verify", {{"suite", tag}, {"seed", o.seed}}};
    std::vector<std::string> tags = tag == "all" ? verify_tags() : std::vector<std::string>{tag};
    Json suites = Json::array();
    std::size_t passed = 0;
    for (const std::string& t : tags) {
        SuiteResult s = run_suite(t, v);
        add_citation(r, t);
        r.lines.push_back(std::string(s.pass() ? "PASS " : "FAIL ") + t);
        Json checks = Json::array();
        for (const CheckResult& c : s.checks) {
            r.lines.push_back("  " + c.name + ": " + std::to_string(c.passed) + "/" + std::to_string(c.total));
            for (const std::string& d : c.details) r.lines.push_back("    " + d);
            if (c.counterexample) r.lines.push_back("    first counterexample: " + *c.counterexample);
            Json check = {{"name", c.name}, {"passed", c.passed}, {"total", c.total}, {"details", c.details}};
            if (c.counterexample) check["counterexample"] = *c.counterexample;
            checks.push_back(check);
        }
        suites.push_back({{"suite", t}, {"pass", s.pass()}, {"checks", checks}});
        if (s.pass()) ++passed;
    }
    if (tags.size() > 1)
        r.lines.push_back(std::to_string(passed) + "/" + std::to_string(tags.size()) + " suites passed");
    r.verdict = passed == tags.size() ? "PASS" : "FAIL";
    r.code = passed == tags.size() ? kExitOk : kExitNegative;
    r.data["suites"] = suites;
    return r;
}

std::string exact_summary(const Rat& s) {
    std::string text = s.to_string();
    if (text.size() <= 80) return text;
    return "exact rational (" + std::to_string(s.num().get_str().size()) + "-digit numerator, " +
           std::to_string(s.den().get_str().size()) + "-digit denominator)";
}

Report run_substantial(const Options& o) {
    PrimeStream p = parse_prime_stream(o.descriptor);
    std::vector<std::uint64_t> checkpoints = o.checkpoints.empty() ? kDefaultCheckpoints : o.checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    SubstantialityReport s = is_substantial(p, checkpoints);
    Report r{"substantial", {{"primes", to_string(p)}}};
    r.verdict = s.verdict == Substantiality::Substantial ? "Substantial" : "Insubstantial";
    if (std::holds_alternative<ArithmeticProgression>(p.kind()) && !p.is_finite())
        add_citation(r, cite::kMertensEstimate);
    r.lines.push_back("verdict: " + std::string(s.verdict == Substantiality::Substantial ? "substantial" : "insubstantial"));
    Json sums = Json::array();
    for (const auto& [x, sum] : s.partial_sums) {
        r.lines.push_back("S(" + std::to_string(x) + ") = " + exact_summary(sum));
        Json entry = {{"x", x},
                      {"numerator_digits", sum.num().get_str().size()},
                      {"denominator_digits", sum.den().get_str().size()}};
        std::string text = sum.to_string();
        if (text.size() <= 1000) entry["exact"] = text;
        sums.push_back(entry);
    }
    Json offsets = Json::array();
    for (const auto& [x, a] : s.mertens_offsets) {
        std::ostringstream line;
        line.precision(6);
        line << std::fixed << "offset at x=" << x << ": " << a << " (approximate)";
        r.lines.push_back(line.str());
        offsets.push_back({{"x", x}, {"approximate_offset", a}});
    }
    if (s.total) r.lines.push_back("total: " + exact_summary(*s.total));
    r.data = {{"partial_sums", sums}, {"mertens_offsets", offsets}};
    if (s.total) r.data["total"] = s.total->to_string();
    return r;
}

std::vector<Rat> parse_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(parse_value(piece));
        } catch (const ParseError&) {
            throw ParseError("bad generator '" + piece + "'", start);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Report run_ns(const Options& o) {
    std::vector<Rat> gens = parse_list(o.descriptor);
    NumericalSemigroup s = ns_from_rationals(gens);
    Report r{"ns", {{"generators", json_list(gens)}}, "ok"};
    add_citation(r, cite::kScaling);
    auto ints = [](std::span<const Integer> v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
        return out + "]";
    };
    auto json_ints = [](std::span<const Integer> v) {
        Json out = Json::array();
        for (const Integer& i : v) out.push_back(i.get_str());
        return out;
    };
    r.lines.push_back("scale: " + s.scale()->get_str());
    r.lines.push_back("scaled generators: " + ints(s.generators()));
    r.lines.push_back("content: " + s.content().get_str());
    NumericalSemigroup core = s.content() == 1 ? s : s.reduced();
    if (s.content() != 1) r.lines.push_back("reduced generators: " + ints(core.generators()));
    auto minimal = ns_minimal_generators(core);
    const Integer& m = core.multiplicity();
    Integer frobenius = *ns_frobenius(core);
    Integer genus = ns_genus(core);
    r.lines.push_back("minimal generators: " + ints(minimal));
    r.lines.push_back("multiplicity: " + m.get_str());
    r.lines.push_back("frobenius: " + frobenius.get_str());
    r.lines.push_back("genus: " + genus.get_str());
    r.data = {{"scale", s.scale()->get_str()},
              {"scaled_generators", json_ints(s.generators())},
              {"content", s.content().get_str()},
              {"minimal_generators", json_ints(minimal)},
              {"multiplicity", m.get_str()},
              {"frobenius", frobenius.get_str()},
              {"genus", genus.get_str()}};
    if (m <= 64) {
        auto apery = ns_apery(core, m);
        r.lines.push_back("apery(" + m.get_str() + "): " + ints(apery));
        r.data["apery"] = json_ints(apery);
    }
    if (!o.contains.empty()) {
        Rat x = parse_value(o.contains);
        auto target = scaled_target(s, x);
        Containment c = target ? ns_contains(s, *target) : Containment{};
        r.input["contains"] = x.to_string();
        std::string rep;
        Json rep_json = Json::object();
        if (c.representation)
            for (const auto& [g, k] : *c.representation) {
                rep += (rep.empty() ? "" : " + ") + (k == 1 ? g.get_str() : k.get_str() + "*" + g.get_str());
                rep_json[g.get_str()] = k.get_str();
            }
        r.lines.push_back("contains " + x.to_string() + ": " + (c.member ? "yes (" + (rep.empty() ? "0" : rep) + ")" : "no"));
        r.data["contains"] = {{"value", x.to_string()}, {"member", c.member}, {"representation", rep_json}};
        if (!c.member) r.code = kExitNegative;
        r.verdict = c.member ? "In" : "NotIn";
    }
    return r;
}

void render(const Report& r, bool structured, std::ostream& out) {
    if (!structured) {
        for (const std::string& line : r.lines) out << line << '\n';
        return;
    }
    Json doc = {{"verb", r.verb}, {"input", r.input}, {"verdict", r.verdict}, {"citations", r.citations},
                {"data", r.data}};
    out << doc.dump(2) << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Puiseux monoid toolkit", "pm"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* depth = app.add_option("--depth", o.depth, "truncation depth")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured", "json"}));
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--budget", o.budget, "node budget per membership call");
    app.add_option("--emit", o.emit, "write the witness as a finite descriptor");

    auto* classify_cmd = app.add_subcommand("classify", "structural flags with citations");
    classify_cmd->add_option("descriptor", o.descriptor)->required();

    auto* member_cmd = app.add_subcommand("member", "decide membership with a certificate");
    member_cmd->add_option("descriptor", o.descriptor)->required();
    member_cmd->add_option("value", o.value)->required();

    auto* atoms_cmd = app.add_subcommand("atoms", "atoms within the truncation");
    atoms_cmd->add_option("descriptor", o.descriptor)->required();

    auto* witness_cmd = app.add_subcommand("witness", "build and verify a construction");
    witness_cmd->add_option("name", o.name)->required();
    witness_cmd->add_option("--primes", o.primes, "prime stream for psums");
    witness_cmd->add_option("--of", o.of, "descriptor the construction runs on");
    witness_cmd->add_option("--r", o.ratio, "ratio");
    witness_cmd->add_option("--n", o.n, "number of terms");

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", o.name)->required();
    verify_cmd->add_option("--r", o.ratio, "ratio");
    verify_cmd->add_option("--trials", o.trials, "random trials");
    verify_cmd->add_option("--n", o.n, "sequence length, or the modulus for eq5.3");
    verify_cmd->add_option("--m", o.m, "progression residue for eq5.3");
    verify_cmd->add_option("--x", o.x, "largest checkpoint for eq5.3");
    verify_cmd->add_option("--scale", o.scale, "suite scale (desk)");

    auto* substantial_cmd = app.add_subcommand("substantial", "reciprocal sums of a prime stream");
    substantial_cmd->add_option("primes", o.descriptor)->required();
    substantial_cmd->add_option("--checkpoints", o.checkpoints, "x values")->delimiter(',');

    auto* ns_cmd = app.add_subcommand("ns", "numerical semigroup invariants");
    ns_cmd->add_option("generators", o.descriptor)->required();
    ns_cmd->add_option("--contains", o.contains, "membership query (before scaling)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pm: " << e.what() << '\n';
        return kExitUsage;
    }

    const bool structured = o.format != "text";
    const bool depth_given = depth->count() > 0;
    try {
        Report r;
        if (classify_cmd->parsed())
            r = run_classify(o);
        else if (member_cmd->parsed())
            r = run_member(o);
        else if (atoms_cmd->parsed())
            r = run_atoms(o);
        else if (witness_cmd->parsed())
            r = run_witness(o, depth_given);
        else if (verify_cmd->parsed())
            r = run_verify(o, depth_given);
        else if (substantial_cmd->parsed())
            r = run_substantial(o);
        else
            r = run_ns(o);
        render(r, structured, out);
        return r.code;
    } catch (const UsageError& e) {
        err << "pm: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "pm: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "pm: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "pm: resource limit: " << e.what() << '\n';
        return kExitUnknown;
    } catch (const std::exception& e) {
        err << "pm: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace pm::cli
