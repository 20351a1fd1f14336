#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "threegap/rational.hpp"

namespace threegap::nt {

enum class CfKind {
    ExactRational,     // the expansion is the whole number
    IrrationalPrefix,  // a truncation of an infinite expansion
};

/// [a0; a1, a2, ..., ad]. Partials are stored from a1 onwards.
struct ContinuedFraction {
    BigInt a0 = 0;
    std::vector<BigInt> partials;
    CfKind kind = CfKind::IrrationalPrefix;

    int depth() const noexcept { return static_cast<int>(partials.size()); }

    /// a_i for 0 <= i <= depth().
    const BigInt& a(int i) const;

    /// Throws DomainError if a partial is < 1, or if an ExactRational
    /// expansion of depth >= 2 ends in 1.
    void validate() const;

    /// "a0;a1,a2,...".
    std::string str() const;

    /// Parses "a0;a1,a2,...". Only a0 = 0 with at least one partial is
    /// accepted, since every value handled here lies in (0, 1).
    static ContinuedFraction parse(std::string_view text, CfKind kind = CfKind::IrrationalPrefix);

    friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y) {
        return x.kind == y.kind && x.a0 == y.a0 && x.partials == y.partials;
    }
};

/// Euclidean expansion of z in (0, 1). The last partial is >= 2 whenever the
/// expansion has more than one partial.
ContinuedFraction cf_from_rational(const Rational& z);

/// p_i, q_i for i = -2 .. depth from the three-term recurrences.
class ConvergentTable {
public:
    struct Row {
        int index;
        BigInt p;
        BigInt q;
    };

    ConvergentTable() = default;
    explicit ConvergentTable(std::vector<Row> rows) : rows_(std::move(rows)) {}

    int depth() const noexcept { return static_cast<int>(rows_.size()) - 3; }
    const BigInt& p(int i) const { return row(i).p; }
    const BigInt& q(int i) const { return row(i).q; }
    /// r_i = p_i / q_i, i >= 0.
    Rational r(int i) const;
    const std::vector<Row>& rows() const noexcept { return rows_; }

private:
    const Row& row(int i) const;
    std::vector<Row> rows_;
};

/// Throws DepthError when depth < 0 or depth > cf.depth().
ConvergentTable convergents(const ContinuedFraction& cf, int depth);

/// Exact value of the (finite) expansion.
Rational cf_value(const ContinuedFraction& cf);

/// N = sum_j digits[j] * q_j with minimal m such that q_m + 1 <= N < q_{m+1} + q_m.
struct OstrowskiRep {
    int m = 0;
    std::vector<std::int64_t> digits;  // b_0 .. b_m
    std::int64_t n = 0;

    std::int64_t leading() const { return digits.back(); }
    /// Number of partials the window test needed (a_1 .. a_{m+1}).
    int consumed_depth() const noexcept { return m + 1; }
};

OstrowskiRep ostrowski(std::int64_t n, const ContinuedFraction& cf);
OstrowskiRep ostrowski(std::int64_t n, const ContinuedFraction& cf, const ConvergentTable& table);

/// True when z's own expansion agrees with cf on a_0 .. a_depth.
bool consistent_prefix(const ContinuedFraction& cf, const Rational& z, int depth);

}  // namespace threegap::nt
