#include "threegap/corpus.hpp"

#include <random>

#include "threegap/errors.hpp"

namespace threegap::corpus {

namespace {

nt::ContinuedFraction from_rule(int depth, auto&& partial) {
    if (depth < 1) throw DomainError("corpus expansions need depth >= 1");
    nt::ContinuedFraction cf;
    cf.kind = nt::CfKind::IrrationalPrefix;
    for (int i = 1; i <= depth; ++i) cf.partials.emplace_back(static_cast<long>(partial(i)));
    return cf;
}

}  // namespace

nt::ContinuedFraction golden(int depth) {
    return from_rule(depth, [](int) { return 1; });
}

nt::ContinuedFraction sqrt2(int depth) {
    return from_rule(depth, [](int) { return 2; });
}

nt::ContinuedFraction euler(int depth) {
    // e - 2 = [0; 1, 2, 1, 1, 4, 1, 1, 6, ...]: a_i = 2(i+1)/3 when i = 2 mod 3.
    return from_rule(depth, [](int i) { return i % 3 == 2 ? 2 * (i + 1) / 3 : 1; });
}

nt::ContinuedFraction random_cf(std::uint64_t seed, int depth, int lo, int hi) {
    if (lo < 1 || hi < lo) throw DomainError("random partial range must satisfy 1 <= lo <= hi");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    // Plain modulo keeps the sequence identical across standard libraries.
    return from_rule(depth, [&](int) { return lo + static_cast<int>(rng() % span); });
}

bool is_named(std::string_view name) { return name == "golden" || name == "sqrt2" || name == "e"; }

nt::ContinuedFraction named(std::string_view name, int depth) {
    if (name == "golden") return golden(depth);
    if (name == "sqrt2") return sqrt2(depth);
    if (name == "e") return euler(depth);
    throw ParseError("unknown named expansion '" + std::string(name) + "'");
}

Realized realize(const nt::ContinuedFraction& prefix) {
    Rational z = nt::cf_value(prefix);
    return {z, nt::cf_from_rational(z)};
}

}  // namespace threegap::corpus
