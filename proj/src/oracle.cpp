#include "threegap/oracle.hpp"

#include <algorithm>
#include <string>

#include "threegap/errors.hpp"

namespace threegap::oracle {

std::int64_t GapMultiset::total_count() const {
    std::int64_t total = 0;
    for (const auto& e : entries) total += e.count;
    return total;
}

Rational GapMultiset::total_length() const {
    Rational total;
    for (const auto& e : entries) total += Rational(e.count) * e.length;
    return total;
}

std::vector<Rational> kronecker_points(const Rational& z, std::int64_t n) {
    if (z.sign() <= 0 || z >= Rational(1)) throw DomainError("z = " + z.str() + " is outside (0,1)");
    if (n < 1) throw DomainError("need at least one point", n);

    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(n));
    const Rational one(1);
    Rational x;
    for (std::int64_t k = 0; k < n; ++k) {
        points.push_back(x);
        x += z;
        if (x >= one) x -= one;
    }
    std::sort(points.begin(), points.end());
    auto dup = std::adjacent_find(points.begin(), points.end());
    if (dup != points.end()) {
        throw CollisionError("point " + dup->str() + " repeats among the first " + std::to_string(n) + " multiples of " +
                                 z.str(),
                             n);
    }
    return points;
}

GapMultiset circular_gaps(std::span<const Rational> points) {
    if (points.empty()) throw DomainError("circular_gaps needs at least one point");
    const Rational one(1);
    if (points.front().sign() < 0 || points.back() >= one) throw DomainError("points must lie in [0,1)");

    std::vector<Rational> gaps;
    gaps.reserve(points.size());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1])) throw DomainError("points must be sorted and distinct");
        gaps.push_back(points[i + 1] - points[i]);
    }
    gaps.push_back(one - points.back() + points.front());
    std::sort(gaps.begin(), gaps.end());

    GapMultiset out;
    for (const auto& g : gaps) {
        if (!out.entries.empty() && out.entries.back().length == g) {
            ++out.entries.back().count;
        } else {
            out.entries.push_back({g, 1});
        }
    }
    return out;
}

GapMultiset as_multiset(const GapStructure& g) {
    std::vector<GapEntry> raw;
    for (auto [len, count] : {std::pair{g.l1, g.n1}, std::pair{g.l2, g.n2}, std::pair{g.l3, g.n3}}) {
        if (count > 0) raw.push_back({len, count});
    }
    std::sort(raw.begin(), raw.end(), [](const GapEntry& a, const GapEntry& b) { return a.length < b.length; });
    GapMultiset out;
    for (auto& e : raw) {
        if (!out.entries.empty() && out.entries.back().length == e.length) {
            out.entries.back().count += e.count;
        } else {
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

VerificationReport verify(const nt::ContinuedFraction& cf, const Rational& z, std::int64_t n_lo, std::int64_t n_hi) {
    if (n_lo < 2 || n_hi < n_lo) throw DomainError("verify needs 2 <= n_lo <= n_hi");
    VerificationReport report;
    report.z = z;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        auto predicted = as_multiset(predict(cf, z, n));
        auto points = kronecker_points(z, n);
        auto observed = circular_gaps(points);
        ++report.checked;
        if (predicted != observed) report.mismatches.push_back({n, std::move(predicted), std::move(observed)});
    }
    return report;
}

}  // namespace threegap::oracle
