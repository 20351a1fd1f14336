#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace threegap {

using BigInt = mpz_class;

/// Exact fraction, always stored reduced with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// live inline and are combined with 128-bit intermediates; anything larger
/// is promoted to a shared, immutable GMP rational. The representation is
/// canonical: a value that fits inline is never held in the big form, so
/// equality never has to compare across forms.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigInt& value);
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p/q" or a bare integer "p"; surrounding blanks are ignored.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    int sign() const;
    bool is_integer() const;
    bool is_inline() const noexcept { return big_ == nullptr; }

    BigInt floor() const;
    /// x - floor(x), in [0, 1).
    Rational frac() const;
    Rational abs() const;

    /// Always "p/q", including integers ("1/1", "0/1").
    std::string str() const;
    /// Decimal rounded half away from zero to `digits` places; display only.
    std::string decimal(int digits) const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class&& big);
    static Rational from_big(mpq_class&& q);
    static Rational from_wide(__int128 num, __int128 den);
    mpq_class to_mpq() const;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace threegap
