#include "pm/descriptors.hpp"

#include <charconv>
#include <sstream>

#include "pm/errors.hpp"

namespace pm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(const Rat& r, const char* what) {
    if (r.is_zero()) throw ArgumentError(std::string(what) + " ratio must be positive");
}

}  // namespace

MonoidDescriptor::MonoidDescriptor(Kind kind) : kind_(std::move(kind)) {
    std::visit(overloaded{
                   [](const family::Finite& f) {
                       if (f.generators.empty())
                           throw ArgumentError("finite descriptor needs at least one generator");
                       for (const Rat& r : f.generators)
                           if (r.is_zero()) throw ArgumentError("finite generators must be positive");
                   },
                   [](const family::Geometric& f) { require_positive(f.ratio, "geometric"); },
                   [](const family::GeometricPartialSums& f) {
                       require_positive(f.ratio, "geometric partial sums");
                   },
                   [](const family::UnboundedGeometricWitness& f) {
                       if (f.ratio.num() <= 1 || f.ratio.den() <= 1)
                           throw ArgumentError(
                               "unbounded geometric witness needs numerator and denominator above 1");
                   },
                   [](const family::PrimeFractions& f) {
                       if (f.power != 1 && f.power != 2)
                           throw ArgumentError("prime fractions power must be 1 or 2");
                   },
                   [](const auto&) {},
               },
               kind_);
}

MonoidDescriptor MonoidDescriptor::finite(std::vector<Rat> generators) {
    return MonoidDescriptor(family::Finite{std::move(generators)});
}
MonoidDescriptor MonoidDescriptor::geometric(Rat ratio) {
    return MonoidDescriptor(family::Geometric{std::move(ratio)});
}
MonoidDescriptor MonoidDescriptor::primary(PrimeStream primes) {
    return MonoidDescriptor(family::Primary{std::move(primes)});
}
MonoidDescriptor MonoidDescriptor::partial_sums_primary(PrimeStream primes) {
    return MonoidDescriptor(family::PartialSumsPrimary{std::move(primes)});
}
MonoidDescriptor MonoidDescriptor::example_ab() { return MonoidDescriptor(family::ExampleAB{}); }
MonoidDescriptor MonoidDescriptor::prime_fractions(int power) {
    return MonoidDescriptor(family::PrimeFractions{power});
}
MonoidDescriptor MonoidDescriptor::geometric_partial_sums(Rat ratio) {
    return MonoidDescriptor(family::GeometricPartialSums{std::move(ratio)});
}
MonoidDescriptor MonoidDescriptor::unbounded_geometric_witness(Rat ratio) {
    return MonoidDescriptor(family::UnboundedGeometricWitness{std::move(ratio)});
}

Truncation::Truncation(std::size_t depth) : depth_(depth) {
    if (depth == 0) throw ArgumentError("truncation depth must be at least 1");
}

std::vector<Rat> generators_up_to(const MonoidDescriptor& d, Truncation k) {
    const std::size_t depth = k.depth();
    std::vector<Rat> out;
    std::visit(
        overloaded{
            [&](const family::Finite& f) { out = f.generators; },
            [&](const family::Geometric& f) {
                Rat term = f.ratio;
                for (std::size_t n = 0; n < depth; ++n) {
                    out.push_back(term);
                    term *= f.ratio;
                }
            },
            [&](const family::Primary& f) {
                for (std::uint64_t p : f.primes.take(depth)) out.emplace_back(Integer(1), to_integer(p));
            },
            [&](const family::PartialSumsPrimary& f) {
                // A short explicit list yields its finite set of partial sums.
                auto primes = f.primes.take(depth);
                Rat sum;
                for (std::uint64_t p : primes) {
                    sum += Rat(Integer(1), to_integer(p));
                    out.push_back(sum);
                }
            },
            [&](const family::ExampleAB&) {
                std::size_t pairs = (depth + 1) / 2;
                auto primes = PrimeStream::all().first(2 * pairs);
                for (std::size_t n = 1; out.size() < depth; ++n) {
                    Integer even = to_integer(primes[2 * n - 1]);
                    Integer odd = to_integer(primes[2 * n - 2]);
                    out.emplace_back(Integer(1), even);
                    if (out.size() < depth) out.emplace_back(odd - 1, odd);
                }
            },
            [&](const family::PrimeFractions& f) {
                for (std::uint64_t p : PrimeStream::all().first(depth)) {
                    Integer pz = to_integer(p);
                    if (f.power == 1)
                        out.emplace_back(pz - 1, pz);
                    else
                        out.emplace_back(pz * pz - 1, pz);
                }
            },
            [&](const family::GeometricPartialSums& f) {
                Rat term = f.ratio;
                Rat sum;
                for (std::size_t n = 0; n < depth; ++n) {
                    sum += term;
                    out.push_back(sum);
                    term *= f.ratio;
                }
            },
            [&](const family::UnboundedGeometricWitness& f) {
                const Integer& a = f.ratio.num();
                const Integer& b = f.ratio.den();
                Integer a_pow = 1, b_pow = 1;
                for (std::size_t n = 1; n <= depth; ++n) {
                    a_pow *= a;
                    b_pow *= b;
                    out.emplace_back((to_integer(n) * b_pow + 1) * a_pow, b_pow);
                }
            },
        },
        d.kind());
    return out;
}

std::string kind_name(const MonoidDescriptor& d) {
    return std::visit(overloaded{
                          [](const family::Finite&) { return "finite"; },
                          [](const family::Geometric&) { return "geometric"; },
                          [](const family::Primary&) { return "primary"; },
                          [](const family::PartialSumsPrimary&) { return "psums-primary"; },
                          [](const family::ExampleAB&) { return "example-ab"; },
                          [](const family::PrimeFractions&) { return "prime-fractions"; },
                          [](const family::GeometricPartialSums&) { return "geo-psums"; },
                          [](const family::UnboundedGeometricWitness&) { return "unbounded-geo"; },
                      },
                      d.kind());
}

std::string serialize_descriptor(const MonoidDescriptor& d) {
    std::string head = kind_name(d);
    return std::visit(
        overloaded{
            [&](const family::Finite& f) {
                std::string s = head + ":";
                for (std::size_t i = 0; i < f.generators.size(); ++i)
                    s += (i ? "," : "") + f.generators[i].to_string();
                return s;
            },
            [&](const family::Geometric& f) { return head + ":" + f.ratio.to_string(); },
            [&](const family::Primary& f) { return head + ":" + to_string(f.primes); },
            [&](const family::PartialSumsPrimary& f) { return head + ":" + to_string(f.primes); },
            [&](const family::ExampleAB&) { return head; },
            [&](const family::PrimeFractions& f) { return head + ":" + std::to_string(f.power); },
            [&](const family::GeometricPartialSums& f) { return head + ":" + f.ratio.to_string(); },
            [&](const family::UnboundedGeometricWitness& f) { return head + ":" + f.ratio.to_string(); },
        },
        d.kind());
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::size_t offset) {
    if (text.empty()) throw ParseError("expected an integer", offset);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", offset);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("expected an integer",
                         offset + static_cast<std::size_t>(ptr - text.data()));
    return value;
}

std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text,
                                                                    std::size_t offset) {
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (piece.empty()) throw ParseError("empty list element", offset + start);
        parts.emplace_back(piece, offset + start);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

// Re-raises construction invariant failures as parse errors at `offset`.
template <class F>
auto at_position(std::size_t offset, F&& build) {
    try {
        return build();
    } catch (const ArgumentError& e) {
        throw ParseError(e.what(), offset);
    }
}

}  // namespace

PrimeStream parse_prime_stream(std::string_view text, std::size_t offset) {
    std::optional<std::uint64_t> limit;
    if (std::size_t semi = text.find(';'); semi != std::string_view::npos) {
        std::string_view tail = text.substr(semi + 1);
        constexpr std::string_view kLimit = "limit=";
        if (tail.substr(0, kLimit.size()) != kLimit)
            throw ParseError("expected 'limit=' after ';'", offset + semi + 1);
        limit = parse_u64(tail.substr(kLimit.size()), offset + semi + 1 + kLimit.size());
        text = text.substr(0, semi);
    }
    if (text.empty()) throw ParseError("empty prime stream", offset);
    if (text == "all") return at_position(offset, [&] { return PrimeStream::all(limit); });
    if (text.substr(0, 3) == "ap(") {
        if (text.back() != ')') throw ParseError("expected ')'", offset + text.size());
        std::string_view inner = text.substr(3, text.size() - 4);
        std::size_t comma = inner.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected 'ap(m,n)'", offset + 3);
        std::uint64_t m = parse_u64(inner.substr(0, comma), offset + 3);
        std::uint64_t n = parse_u64(inner.substr(comma + 1), offset + 4 + comma);
        return at_position(offset, [&] { return PrimeStream::progression(m, n, limit); });
    }
    std::vector<std::uint64_t> primes;
    for (auto [piece, pos] : split_commas(text, offset)) primes.push_back(parse_u64(piece, pos));
    return at_position(offset, [&] { return PrimeStream::explicit_list(std::move(primes), limit); });
}

MonoidDescriptor parse_descriptor(std::string_view text) {
    std::size_t lead = 0;
    while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) ++lead;
    std::size_t trail = text.size();
    while (trail > lead && (text[trail - 1] == ' ' || text[trail - 1] == '\t' ||
                            text[trail - 1] == '\n' || text[trail - 1] == '\r'))
        --trail;
    text = text.substr(lead, trail - lead);

    std::size_t colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const std::size_t body_at = lead + (colon == std::string_view::npos ? text.size() : colon + 1);

    auto need_body = [&] {
        if (colon == std::string_view::npos || body.empty())
            throw ParseError("descriptor '" + std::string(head) + "' needs parameters", body_at);
    };

    if (head == "example-ab") {
        if (colon != std::string_view::npos) throw ParseError("example-ab takes no parameters", lead + colon);
        return MonoidDescriptor::example_ab();
    }
    need_body();
    if (head == "finite") {
        std::vector<Rat> gens;
        for (auto [piece, pos] : split_commas(body, body_at)) gens.push_back(parse_rat(piece, pos));
        return at_position(body_at, [&] { return MonoidDescriptor::finite(std::move(gens)); });
    }
    if (head == "geometric")
        return at_position(body_at, [&] { return MonoidDescriptor::geometric(parse_rat(body, body_at)); });
    if (head == "geo-psums")
        return at_position(
            body_at, [&] { return MonoidDescriptor::geometric_partial_sums(parse_rat(body, body_at)); });
    if (head == "unbounded-geo")
        return at_position(body_at, [&] {
            return MonoidDescriptor::unbounded_geometric_witness(parse_rat(body, body_at));
        });
    if (head == "primary") return MonoidDescriptor::primary(parse_prime_stream(body, body_at));
    if (head == "psums-primary")
        return MonoidDescriptor::partial_sums_primary(parse_prime_stream(body, body_at));
    if (head == "prime-fractions") {
        if (body != "1" && body != "2") throw ParseError("prime-fractions power must be 1 or 2", body_at);
        return MonoidDescriptor::prime_fractions(body == "1" ? 1 : 2);
    }
    throw ParseError("unknown descriptor kind '" + std::string(head) + "'", lead);
}

}  // namespace pm
