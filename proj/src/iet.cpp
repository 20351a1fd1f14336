#include "threegap/iet.hpp"

#include <algorithm>
#include <string>

#include "threegap/errors.hpp"

namespace threegap::iet {

namespace {

bool is_bijection(const std::array<int, 2>& pi) {
    return (pi[0] == 1 && pi[1] == 2) || (pi[0] == 2 && pi[1] == 1);
}

// Sorted arcs must start at 0, abut exactly and end at 1.
void check_tiling(const std::vector<Tile>& tiles, const char* what) {
    Rational cursor;
    for (const auto& t : tiles) {
        if (t.left != cursor) {
            throw TilingError(std::string(what) + ": arc at " + t.left.str() + " but previous arc ends at " + cursor.str());
        }
        cursor = t.left + t.length;
    }
    if (cursor != Rational(1)) throw TilingError(std::string(what) + ": arcs end at " + cursor.str() + ", not 1");
}

void sort_tiles(std::vector<Tile>& tiles) {
    std::sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) { return a.left < b.left; });
}

}  // namespace

IntervalExchange::IntervalExchange(std::array<int, 2> pi0, std::array<int, 2> pi1, std::array<Rational, 2> lambda)
    : pi0_(pi0), pi1_(pi1), lambda_(std::move(lambda)) {
    if (!is_bijection(pi0_) || !is_bijection(pi1_)) throw DomainError("permutations must be bijections onto {1,2}");
    if (pi0_ == pi1_) throw DomainError("pi0 == pi1 gives the identity map");
    if (lambda_[0].sign() <= 0 || lambda_[1].sign() <= 0) throw DomainError("interval lengths must be positive");
    total_ = lambda_[0] + lambda_[1];
}

Label IntervalExchange::at(int eps, int position) const {
    const auto& pi = eps == 0 ? pi0_ : pi1_;
    return pi[0] == position ? Label::A : Label::B;
}

Rational IntervalExchange::offset(int eps, Label l) const {
    const int pos = eps == 0 ? pi0(l) : pi1(l);
    return pos == 1 ? Rational() : lambda(other(l));
}

IntervalExchange make_rotation(const Rational& z) {
    if (z.sign() <= 0 || z >= Rational(1)) throw DomainError("z = " + z.str() + " is outside (0,1)");
    return IntervalExchange({1, 2}, {2, 1}, {Rational(1) - z, z});
}

Rational apply(const IntervalExchange& f, const Rational& x) {
    if (x.sign() < 0 || x >= f.total()) {
        throw DomainError("x = " + x.str() + " outside [0, " + f.total().str() + ")");
    }
    const Label first = f.at(0, 1);
    const Label l = x < f.lambda(first) ? first : other(first);
    return x - f.offset(0, l) + f.offset(1, l);
}

int iet_type(const IntervalExchange& f) {
    const Label right0 = f.at(0, 2);
    const Label right1 = f.at(1, 2);
    const auto cmp = f.lambda(right0) <=> f.lambda(right1);
    if (cmp == 0) {
        throw KeaneViolation("rightmost intervals have equal length " + f.lambda(right0).str() + "; type undefined");
    }
    return cmp > 0 ? 0 : 1;
}

RauzyStep rauzy_step(const IntervalExchange& f) {
    const int eps = iet_type(f);
    const Label winner = f.at(eps, 2);
    const Label loser = f.at(1 - eps, 2);
    // With two intervals the combinatorial data is a fixed point of the
    // induction; only the winner shrinks.
    std::array<Rational, 2> lambda = f.lengths();
    lambda[static_cast<std::size_t>(winner)] -= f.lambda(loser);
    IntervalExchange after({f.pi0(Label::A), f.pi0(Label::B)}, {f.pi1(Label::A), f.pi1(Label::B)}, std::move(lambda));
    return RauzyStep{eps, winner, loser, f, std::move(after), std::nullopt};
}

RauzyStep zorich_step(const IntervalExchange& f) {
    RauzyStep block = rauzy_step(f);
    std::uint64_t count = 1;
    while (!block.after.keane_degenerate() && iet_type(block.after) == block.eps) {
        block.after = rauzy_step(block.after).after;
        ++count;
    }
    block.a_count = count;
    return block;
}

ZorichQuotients zorich_quotients(const IntervalExchange& f, int max_blocks) {
    ZorichQuotients out;
    IntervalExchange cur = f;
    for (int k = 0; k < max_blocks; ++k) {
        if (cur.keane_degenerate()) {
            out.stopped_by = Truncation::Keane;
            return out;
        }
        RauzyStep block = zorich_step(cur);
        if (block.ends_in_keane()) {
            out.quotients.push_back(*block.a_count + 1);
            out.stopped_by = Truncation::Keane;
            return out;
        }
        out.quotients.push_back(*block.a_count);
        cur = std::move(block.after);
    }
    out.stopped_by = Truncation::MaxBlocks;
    return out;
}

nt::ContinuedFraction cf_from_quotients(const ZorichQuotients& zq, Side side) {
    nt::ContinuedFraction cf;
    cf.kind = zq.stopped_by == Truncation::Keane ? nt::CfKind::ExactRational : nt::CfKind::IrrationalPrefix;
    if (zq.quotients.empty()) return cf;
    auto it = zq.quotients.begin();
    if (side == Side::BelowHalf) {
        cf.partials.emplace_back(static_cast<unsigned long>(*it + 1));
        ++it;
    } else {
        cf.partials.emplace_back(1);
    }
    for (; it != zq.quotients.end(); ++it) cf.partials.emplace_back(static_cast<unsigned long>(*it));
    return cf;
}

PartitionReport verify_partition(const Rational& z, int m) {
    if (m < 1) throw DomainError("verify_partition needs m >= 1");
    if (z == Rational(1, 2)) throw DomainError("z = 1/2 has no induction");
    const auto cf = nt::cf_from_rational(z);
    if (m >= cf.depth()) {
        throw InsufficientDepth("m = " + std::to_string(m) + " needs more than the " + std::to_string(cf.depth()) +
                                " partials of " + z.str());
    }
    const auto table = nt::convergents(cf, m);

    const IntervalExchange rotation = make_rotation(z);
    IntervalExchange cur = rotation;
    // Return time of each induced piece to the current induction interval.
    std::array<std::int64_t, 2> height{1, 1};

    PartitionReport report;
    report.m = m;
    report.blocks = z > Rational(1, 2) ? m - 1 : m;
    for (int b = 0; b < report.blocks; ++b) {
        const int eps = iet_type(cur);
        do {
            RauzyStep step = rauzy_step(cur);
            height[static_cast<std::size_t>(step.loser)] += height[static_cast<std::size_t>(step.winner)];
            cur = std::move(step.after);
        } while (!cur.keane_degenerate() && iet_type(cur) == eps);
        if (cur.keane_degenerate()) {
            throw InsufficientDepth("induction of " + z.str() + " degenerates in block " + std::to_string(b + 1));
        }
    }

    // A sits at [0, lambda_A), B at [lambda_A, total) in the induced interval.
    std::vector<Tile> towers;
    for (Label l : {Label::A, Label::B}) {
        Rational x = cur.offset(0, l);
        for (std::int64_t j = 0; j < height[static_cast<std::size_t>(l)]; ++j) {
            towers.push_back({x, cur.lambda(l)});
            x = apply(rotation, x);
        }
    }
    sort_tiles(towers);
    check_tiling(towers, "tower partition");
    for (const auto& t : towers) report.tower_endpoints.push_back(t.left);

    const Label long_label = cur.lambda(Label::A) > cur.lambda(Label::B) ? Label::A : Label::B;
    report.long_length = cur.lambda(long_label);
    report.short_length = cur.lambda(other(long_label));
    report.long_count = height[static_cast<std::size_t>(long_label)];
    report.short_count = height[static_cast<std::size_t>(other(long_label))];
    if (BigInt(static_cast<long>(report.long_count)) != table.q(m) ||
        BigInt(static_cast<long>(report.short_count)) != table.q(m - 1)) {
        throw TilingError("expected " + table.q(m).get_str() + " long and " + table.q(m - 1).get_str() +
                          " short arcs, got " + std::to_string(report.long_count) + " and " +
                          std::to_string(report.short_count));
    }

    // The B tower starts at f^{-r_B}(0); pushing every arc forward r_B times
    // moves the orbit segment to start at 0.
    const Rational shift = (Rational(height[static_cast<std::size_t>(Label::B)]) * z).frac();
    report.tiles.reserve(towers.size());
    for (const auto& t : towers) report.tiles.push_back({(t.left + shift).frac(), t.length});
    sort_tiles(report.tiles);
    check_tiling(report.tiles, "rotated partition");
    for (const auto& t : report.tiles) report.left_endpoints.push_back(t.left);
    return report;
}

}  // namespace threegap::iet
