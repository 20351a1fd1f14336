#include "threegap/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "threegap/errors.hpp"

namespace threegap {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

bool fits_inline(i128 v) { return v >= -static_cast<i128>(kInlineMax) && v <= kInlineMax; }

bool fits_inline(const BigInt& v) {
    return mpz_fits_slong_p(v.get_mpz_t()) != 0 && v >= -kInlineMax;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt to_big(i128 v) {
    u128 u = abs128(v);
    BigInt r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
    if (v < 0) r = -r;
    return r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    BigInt v(std::string(digits), 10);
    return s.front() == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        *this = from_wide(value, 1);
    } else {
        num_ = value;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    *this = from_wide(n / static_cast<i128>(g), d / static_cast<i128>(g));
}

Rational::Rational(const BigInt& value) : Rational(value, BigInt(1)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    *this = from_big(std::move(q));
}

Rational::Rational(mpq_class&& big) : big_(std::make_shared<const mpq_class>(std::move(big))) {}

Rational Rational::from_big(mpq_class&& q) {
    if (fits_inline(q.get_num()) && fits_inline(q.get_den())) {
        Rational r;
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
        return r;
    }
    return Rational(std::move(q));
}

Rational Rational::from_wide(i128 num, i128 den) {
    if (fits_inline(num) && fits_inline(den)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q;
    q.get_num() = to_big(num);
    q.get_den() = to_big(den);
    return Rational(std::move(q));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = static_cast<long>(num_);
    q.get_den() = static_cast<long>(den_);
    return q;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::numerator() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }

BigInt Rational::denominator() const {
    return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_));
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

BigInt Rational::floor() const {
    if (big_) {
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
        return r;
    }
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return BigInt(static_cast<long>(q));
}

Rational Rational::frac() const {
    if (!big_) {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        Rational out;
        out.num_ = r;
        out.den_ = r == 0 ? 1 : den_;
        return out;
    }
    return *this - Rational(floor());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw DomainError("negative decimal digit count");
    BigInt num = numerator();
    BigInt den = denominator();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0 ? "-" : "") + body;
}

Rational Rational::operator-() const {
    if (big_) return from_big(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_big(mpq_class(a.to_mpq() + b.to_mpq()));
    // Knuth's reduced addition: gcd(t, b1*d) divides gcd(t, g).
    auto bd = static_cast<std::uint64_t>(a.den_);
    auto dd = static_cast<std::uint64_t>(b.den_);
    std::uint64_t g = std::gcd(bd, dd);
    i128 t = static_cast<i128>(a.num_) * static_cast<i128>(dd / g) +
             static_cast<i128>(b.num_) * static_cast<i128>(bd / g);
    if (t == 0) return Rational();
    auto g2 = std::gcd(static_cast<std::uint64_t>(abs128(t) % g), g);
    return Rational::from_wide(t / static_cast<i128>(g2),
                               static_cast<i128>(bd / g) * static_cast<i128>(dd / g2));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_big(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    auto au = static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_);
    auto bu = static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_);
    std::uint64_t g1 = std::gcd(au, static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = std::gcd(bu, static_cast<std::uint64_t>(a.den_));
    i128 num = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) *
               static_cast<i128>(b.num_ / static_cast<std::int64_t>(g2));
    i128 den = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) *
               static_cast<i128>(b.den_ / static_cast<std::int64_t>(g1));
    return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw DomainError("division by zero");
    if (b.big_) {
        mpq_class inv = 1 / *b.big_;
        return a * Rational::from_big(std::move(inv));
    }
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace threegap
