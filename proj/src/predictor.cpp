#include "threegap/predictor.hpp"

#include <string>

#include "threegap/errors.hpp"

namespace threegap {

namespace {

void require_open_unit(const Rational& z) {
    if (z.sign() <= 0 || z >= Rational(1)) throw DomainError("z = " + z.str() + " is outside (0,1)");
    if (z == Rational(1, 2)) throw DomainError("z = 1/2 sits on the branch split and is rejected");
}

}  // namespace

const Rational& KSequence::at(int j) const {
    if (j < -1 || j > depth()) throw DepthError("K_" + std::to_string(j) + " not computed (depth " + std::to_string(depth()) + ")");
    return values[static_cast<std::size_t>(j + 1)];
}

KSequence k_sequence(const Rational& z, const nt::ConvergentTable& table, int depth) {
    require_open_unit(z);
    if (depth < -1 || depth > table.depth()) {
        throw DepthError("K-sequence depth " + std::to_string(depth) + " exceeds convergent table depth " +
                         std::to_string(table.depth()));
    }
    KSequence ks;
    ks.z = z;
    ks.side = z < Rational(1, 2) ? Side::BelowHalf : Side::AboveHalf;
    ks.values.reserve(static_cast<std::size_t>(depth) + 2);
    ks.values.emplace_back(1);
    for (int j = 0; j <= depth; ++j) {
        Rational f = (Rational(table.q(j)) * z).frac();
        if (f.sign() == 0) {
            throw DepthError("z = " + z.str() + " equals its convergent r_" + std::to_string(j) + "; K_" +
                             std::to_string(j) + " vanishes");
        }
        ks.values.push_back(j % 2 == 0 ? f : Rational(1) - f);
    }
    return ks;
}

GapStructure predict(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n) {
    require_open_unit(z);
    if (n < 2) throw DomainError("predict needs N >= 2", n);
    if (BigInt(static_cast<long>(n)) > z.denominator()) {
        throw CollisionError("N = " + std::to_string(n) + " exceeds the denominator of z = " + z.str() +
                                 "; points {n z} collide",
                             n);
    }

    auto table = nt::convergents(cf, cf.depth());
    auto rep = nt::ostrowski(n, cf, table);
    if (!nt::consistent_prefix(cf, z, rep.consumed_depth())) {
        throw DomainError("z = " + z.str() + " disagrees with " + cf.str() + " within the first " +
                              std::to_string(rep.consumed_depth()) + " partials",
                          n);
    }
    auto ks = k_sequence(z, table, rep.m);

    const int m = rep.m;
    const std::int64_t b = rep.leading();
    const auto q_m = table.q(m).get_si();
    const auto q_prev = table.q(m - 1).get_si();

    GapStructure g;
    g.n = n;
    g.m = m;
    g.b_m = b;
    g.l2 = ks.at(m);
    g.l1 = ks.at(m - 1) - Rational(b) * g.l2;
    g.l3 = g.l1 + g.l2;
    g.n1 = n - b * q_m - q_prev;
    g.n2 = n - q_m;
    g.n3 = q_m - g.n1;
    g.consumed_depth = rep.consumed_depth();
    return g;
}

std::vector<GapStructure> gap_evolution(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n_max) {
    if (n_max < 2) throw DomainError("evolution needs N_max >= 2", n_max);
    std::vector<GapStructure> rows;
    rows.reserve(static_cast<std::size_t>(n_max - 1));
    for (std::int64_t n = 2; n <= n_max; ++n) rows.push_back(predict(cf, z, n));
    return rows;
}

}  // namespace threegap
