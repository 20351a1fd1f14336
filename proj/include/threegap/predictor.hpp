#pragma once

#include <cstdint>
#include <vector>

#include "threegap/numtheory.hpp"
#include "threegap/rational.hpp"

namespace threegap {

enum class Side { BelowHalf, AboveHalf };

/// K_{-1}, K_0, ..., K_depth for a fixed z.
struct KSequence {
    Rational z;
    Side side = Side::BelowHalf;
    std::vector<Rational> values;  // values[j + 1] == K_j

    int depth() const noexcept { return static_cast<int>(values.size()) - 2; }
    const Rational& at(int j) const;
};

/// K_{-1} = 1; K_j = {q_j z} for even j and 1 - {q_j z} for odd j, which is
/// the distance |q_j z - p_j| from q_j z to its nearest convergent numerator.
///
/// Throws DomainError for z outside (0,1) or z = 1/2, DepthError when depth
/// exceeds the table or reaches the index where z itself is the convergent
/// (K would vanish there).
KSequence k_sequence(const Rational& z, const nt::ConvergentTable& table, int depth);

/// Gap lengths and counts of the N-point set {n z mod 1 : n = 0 .. N-1}.
struct GapStructure {
    std::int64_t n = 0;
    int m = 0;
    std::int64_t b_m = 0;
    Rational l1, l2, l3;
    std::int64_t n1 = 0, n2 = 0, n3 = 0;
    /// Partials a_1 .. a_{consumed_depth} the answer depends on.
    int consumed_depth = 0;

    friend bool operator==(const GapStructure&, const GapStructure&) = default;
};

/// Closed-form gap structure for N >= 2 points.
///
/// `cf` must agree with the expansion of `z` on every partial the window
/// test consumes. For rational z with denominator q*, N <= q* is required
/// so that the points are distinct (CollisionError otherwise).
GapStructure predict(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n);

/// predict() for N = 2 .. n_max, in order.
std::vector<GapStructure> gap_evolution(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n_max);

}  // namespace threegap
