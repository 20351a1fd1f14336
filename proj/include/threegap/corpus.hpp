#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "threegap/numtheory.hpp"

// Named expansions used by the CLI and the acceptance runs.
namespace threegap::corpus {

/// [0; 1, 1, 1, ...]
nt::ContinuedFraction golden(int depth);
/// [0; 2, 2, 2, ...], the expansion of sqrt(2) - 1.
nt::ContinuedFraction sqrt2(int depth);
/// [0; 1, 2, 1, 1, 4, 1, 1, 6, ...], the expansion of e - 2.
nt::ContinuedFraction euler(int depth);
/// Partials drawn uniformly from [lo, hi] by a seeded mt19937_64.
nt::ContinuedFraction random_cf(std::uint64_t seed, int depth, int lo = 1, int hi = 9);

/// "golden", "sqrt2", "e"; throws ParseError for anything else.
nt::ContinuedFraction named(std::string_view name, int depth);
bool is_named(std::string_view name);

/// A prefix realized as an exact number: the value of its last convergent,
/// together with that number's canonical expansion.
struct Realized {
    Rational z;
    nt::ContinuedFraction cf;
};

Realized realize(const nt::ContinuedFraction& prefix);

}  // namespace threegap::corpus
