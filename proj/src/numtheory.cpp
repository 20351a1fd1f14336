#include "threegap/numtheory.hpp"

#include <algorithm>
#include <cctype>

#include "threegap/errors.hpp"

namespace threegap::nt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_natural(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("malformed continued fraction '" + std::string(whole) + "'");
    }
    return BigInt(std::string(s), 10);
}

}  // namespace

const BigInt& ContinuedFraction::a(int i) const {
    if (i == 0) return a0;
    if (i < 0 || i > depth()) {
        throw DepthError("partial a_" + std::to_string(i) + " not available (depth " + std::to_string(depth()) + ")");
    }
    return partials[static_cast<std::size_t>(i - 1)];
}

void ContinuedFraction::validate() const {
    for (std::size_t i = 0; i < partials.size(); ++i) {
        if (partials[i] < 1) {
            throw DomainError("partial a_" + std::to_string(i + 1) + " must be >= 1");
        }
    }
    if (kind == CfKind::ExactRational && !partials.empty() && partials.back() == 1 &&
        (partials.size() >= 2 || a0 == 0)) {
        throw DomainError("exact expansion must end in a partial >= 2");
    }
}

std::string ContinuedFraction::str() const {
    std::string out = a0.get_str() + ";";
    for (std::size_t i = 0; i < partials.size(); ++i) {
        if (i) out += ',';
        out += partials[i].get_str();
    }
    return out;
}

ContinuedFraction ContinuedFraction::parse(std::string_view text, CfKind kind) {
    std::string_view s = trim(text);
    auto semi = s.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("continued fraction '" + std::string(text) + "' lacks ';'");
    }
    ContinuedFraction cf;
    cf.kind = kind;
    cf.a0 = parse_natural(s.substr(0, semi), text);
    std::string_view rest = s.substr(semi + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        cf.partials.push_back(parse_natural(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (trim(rest).empty()) throw ParseError("trailing ',' in '" + std::string(text) + "'");
    }
    if (cf.a0 != 0) throw DomainError("only expansions of numbers in (0,1) are supported (a0 = 0)");
    if (cf.partials.empty()) throw DomainError("continued fraction needs at least one partial");
    cf.validate();
    return cf;
}

ContinuedFraction cf_from_rational(const Rational& z) {
    if (z.sign() <= 0 || z >= Rational(1)) {
        throw DomainError("z = " + z.str() + " is outside (0,1)");
    }
    ContinuedFraction cf;
    cf.kind = CfKind::ExactRational;
    BigInt num = z.numerator();
    BigInt den = z.denominator();
    cf.a0 = num / den;  // 0
    num -= cf.a0 * den;
    while (num != 0) {
        BigInt a = den / num;
        BigInt r = den - a * num;
        cf.partials.push_back(std::move(a));
        den = std::move(num);
        num = std::move(r);
    }
    return cf;
}

const ConvergentTable::Row& ConvergentTable::row(int i) const {
    if (i < -2 || i > depth()) {
        throw DepthError("convergent index " + std::to_string(i) + " outside table (depth " + std::to_string(depth()) + ")");
    }
    return rows_[static_cast<std::size_t>(i + 2)];
}

Rational ConvergentTable::r(int i) const {
    if (i < 0) throw DepthError("convergent r_i needs i >= 0");
    return Rational(p(i), q(i));
}

ConvergentTable convergents(const ContinuedFraction& cf, int depth) {
    if (depth < 0 || depth > cf.depth()) {
        throw DepthError("requested depth " + std::to_string(depth) + " but only " + std::to_string(cf.depth()) +
                         " partials are available");
    }
    std::vector<ConvergentTable::Row> rows;
    rows.reserve(static_cast<std::size_t>(depth) + 3);
    rows.push_back({-2, 0, 1});
    rows.push_back({-1, 1, 0});
    for (int i = 0; i <= depth; ++i) {
        const auto& prev = rows[rows.size() - 1];
        const auto& prev2 = rows[rows.size() - 2];
        const BigInt& ai = cf.a(i);
        rows.push_back({i, ai * prev.p + prev2.p, ai * prev.q + prev2.q});
    }
    return ConvergentTable(std::move(rows));
}

Rational cf_value(const ContinuedFraction& cf) {
    auto table = convergents(cf, cf.depth());
    return table.r(cf.depth());
}

OstrowskiRep ostrowski(std::int64_t n, const ContinuedFraction& cf) {
    return ostrowski(n, cf, convergents(cf, cf.depth()));
}

OstrowskiRep ostrowski(std::int64_t n, const ContinuedFraction& cf, const ConvergentTable& table) {
    if (n < 2) throw DomainError("Ostrowski representation needs N >= 2", n);
    const BigInt big_n = static_cast<long>(n);
    const int limit = std::min(cf.depth(), table.depth());

    int m = -1;
    for (int k = 0; k + 1 <= limit; ++k) {
        if (table.q(k) + 1 <= big_n && big_n < table.q(k + 1) + table.q(k)) {
            m = k;
            break;
        }
    }
    if (m < 0) {
        throw InsufficientDepth("N = " + std::to_string(n) + " exceeds every window q_m + 1 <= N < q_{m+1} + q_m within depth " +
                                    std::to_string(limit),
                                n);
    }

    // The leading digit is pinned by the window: N - b_m q_m must stay in
    // [q_{m-1}, q_m + q_{m-1}). Lower digits take the largest value the
    // bound a_{j+1} allows.
    OstrowskiRep rep;
    rep.m = m;
    rep.n = n;
    rep.digits.assign(static_cast<std::size_t>(m) + 1, 0);

    BigInt lead = (big_n - table.q(m - 1)) / table.q(m);
    BigInt rem = big_n - lead * table.q(m);
    rep.digits[static_cast<std::size_t>(m)] = lead.get_si();
    for (int j = m - 1; j >= 0; --j) {
        BigInt b = rem / table.q(j);
        if (b > cf.a(j + 1)) b = cf.a(j + 1);
        rem -= b * table.q(j);
        rep.digits[static_cast<std::size_t>(j)] = b.get_si();
    }

    if (rem != 0 || rep.leading() < 1) {
        throw RepresentationError("digit extraction failed for N = " + std::to_string(n), n);
    }
    for (int j = 0; j <= m; ++j) {
        auto b = rep.digits[static_cast<std::size_t>(j)];
        if (b < 0 || BigInt(static_cast<long>(b)) > cf.a(j + 1)) {
            throw RepresentationError("digit b_" + std::to_string(j) + " out of range for N = " + std::to_string(n), n);
        }
    }
    return rep;
}

bool consistent_prefix(const ContinuedFraction& cf, const Rational& z, int depth) {
    if (depth > cf.depth()) return false;
    ContinuedFraction own = cf_from_rational(z);
    if (own.depth() < depth || own.a0 != cf.a0) return false;
    for (int i = 1; i <= depth; ++i) {
        if (own.a(i) != cf.a(i)) return false;
    }
    return true;
}

}  // namespace threegap::nt
