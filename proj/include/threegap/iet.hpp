#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "threegap/numtheory.hpp"
#include "threegap/predictor.hpp"
#include "threegap/rational.hpp"

// Two-interval exchange transformations and their Rauzy-Veech / Zorich
// induction. Positions are 1-based as in the usual combinatorial data: the
// rightmost position is 2.
namespace threegap::iet {

enum class Label : std::uint8_t { A = 0, B = 1 };

inline Label other(Label l) { return l == Label::A ? Label::B : Label::A; }
inline char to_char(Label l) { return l == Label::A ? 'A' : 'B'; }

class IntervalExchange {
public:
    /// pi0/pi1 map each label (indexed A, B) to its position before/after
    /// the map. Throws DomainError unless both are bijections onto {1, 2},
    /// they differ, and both lengths are positive.
    IntervalExchange(std::array<int, 2> pi0, std::array<int, 2> pi1, std::array<Rational, 2> lambda);

    const Rational& lambda(Label l) const { return lambda_[index(l)]; }
    const std::array<Rational, 2>& lengths() const noexcept { return lambda_; }
    const Rational& total() const noexcept { return total_; }
    int pi0(Label l) const { return pi0_[index(l)]; }
    int pi1(Label l) const { return pi1_[index(l)]; }
    /// pi_eps^{-1}(position).
    Label at(int eps, int position) const;

    /// Left endpoint of I_l in the domain (eps = 0) or the image (eps = 1).
    Rational offset(int eps, Label l) const;

    /// The two rightmost intervals have equal length: no type is defined.
    bool keane_degenerate() const { return lambda_[0] == lambda_[1]; }

    friend bool operator==(const IntervalExchange&, const IntervalExchange&) = default;

private:
    static std::size_t index(Label l) { return static_cast<std::size_t>(l); }

    std::array<int, 2> pi0_;
    std::array<int, 2> pi1_;
    std::array<Rational, 2> lambda_;
    Rational total_;
};

/// x -> x + z mod 1 as the exchange of A = [0, 1-z) and B = [1-z, 1).
IntervalExchange make_rotation(const Rational& z);

/// Translate x in [0, total) by the offset of the interval containing it.
Rational apply(const IntervalExchange& f, const Rational& x);

/// eps with lambda_{pi_eps^{-1}(2)} > lambda_{pi_{1-eps}^{-1}(2)}.
/// Throws KeaneViolation when the two lengths coincide.
int iet_type(const IntervalExchange& f);

struct RauzyStep {
    int eps = 0;
    Label winner = Label::A;
    Label loser = Label::B;
    IntervalExchange before;
    IntervalExchange after;
    /// Number of elementary steps folded in; set by zorich_step only.
    std::optional<std::uint64_t> a_count;

    /// The step left the two lengths equal, so no further step is defined.
    bool ends_in_keane() const { return after.keane_degenerate(); }
};

/// First-return map of f to the interval left after removing the loser.
RauzyStep rauzy_step(const IntervalExchange& f);

/// rauzy_step repeated while the type stays the same. A block that lands on
/// equal lengths stops there with ends_in_keane() set.
RauzyStep zorich_step(const IntervalExchange& f);

enum class Truncation { MaxBlocks, Keane };

struct ZorichQuotients {
    std::vector<std::uint64_t> quotients;
    Truncation stopped_by = Truncation::MaxBlocks;
};

/// Successive block lengths. A block that ends on equal lengths reports its
/// Euclidean quotient a_count + 1 (the step that would exhaust the winner)
/// and ends the list.
ZorichQuotients zorich_quotients(const IntervalExchange& f, int max_blocks);

/// Expansion of z rebuilt from the quotients of make_rotation(z):
/// [0; 1 + a'_0, a'_1, ...] below one half, [0; 1, a'_0, a'_1, ...] above.
nt::ContinuedFraction cf_from_quotients(const ZorichQuotients& zq, Side side);

struct Tile {
    Rational left;
    Rational length;

    friend bool operator==(const Tile&, const Tile&) = default;
};

struct PartitionReport {
    int m = 0;
    int blocks = 0;  // Zorich blocks applied to make_rotation(z)
    Rational long_length;
    Rational short_length;
    std::int64_t long_count = 0;   // q_m
    std::int64_t short_count = 0;  // q_{m-1}
    /// Towers over the induced pieces, rotated so that 0 is a left endpoint.
    std::vector<Tile> tiles;
    std::vector<Rational> left_endpoints;
    /// Left endpoints of the unrotated towers {f^j(I'_l) : 0 <= j < r_l}.
    std::vector<Rational> tower_endpoints;
};

/// Splits [0,1) into q_m long and q_{m-1} short arcs via the towers over the
/// pieces of the induced map after m - 1 (z > 1/2) or m (z < 1/2) Zorich
/// blocks. Requires 1 <= m < depth of z's expansion (InsufficientDepth).
/// Throws TilingError if the arcs overlap, leave a hole or miscount.
PartitionReport verify_partition(const Rational& z, int m);

}  // namespace threegap::iet
