#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "threegap/numtheory.hpp"
#include "threegap/predictor.hpp"
#include "threegap/rational.hpp"

// Brute-force ground truth. Nothing here looks at convergents, K-values or
// Ostrowski digits; points are generated and measured directly.
namespace threegap::oracle {

struct GapEntry {
    Rational length;
    std::int64_t count = 0;

    friend bool operator==(const GapEntry&, const GapEntry&) = default;
};

/// Distinct gap lengths, strictly increasing, with multiplicities.
struct GapMultiset {
    std::vector<GapEntry> entries;

    std::int64_t total_count() const;
    Rational total_length() const;

    friend bool operator==(const GapMultiset&, const GapMultiset&) = default;
};

/// {n z mod 1 : n = 0 .. N-1}, sorted ascending.
/// Throws CollisionError if two points coincide.
std::vector<Rational> kronecker_points(const Rational& z, std::int64_t n);

/// Successive differences plus the wrap-around gap 1 - last + first.
/// Throws DomainError unless the input is nonempty, strictly increasing and in [0,1).
GapMultiset circular_gaps(std::span<const Rational> points);

/// The predictor's {(L_i, N_i) : N_i > 0}, merging lengths that coincide.
GapMultiset as_multiset(const GapStructure& g);

struct Mismatch {
    std::int64_t n = 0;
    GapMultiset predicted;
    GapMultiset observed;
};

struct VerificationReport {
    Rational z;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::int64_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares predict() with the measured gaps for every N in [n_lo, n_hi].
VerificationReport verify(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n_lo, std::int64_t n_hi);

}  // namespace threegap::oracle
