#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace boxhelly {

// Exact rational number with 64-bit numerator and denominator.
// Always stored reduced with den > 0. Arithmetic and comparisons run
// through __int128 intermediates; a result whose reduced form does not
// fit 64 bits throws OverflowError. All coordinate comparisons in the
// engine go through this type -- no floating point on any predicate path.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: intentionally implicit
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const;
    std::int64_t ceil() const;
    double to_double() const;

    // "p" when integral, "p/q" otherwise, lowest terms.
    std::string str() const;

    // Accepts "p", "p/q", and decimal forms ("1.25", "-0.5e-3"), parsed exactly.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Reduces num/den given as 128-bit values; throws OverflowError if the
    // reduced form leaves the 64-bit range, InvalidArgument on zero den.
    static Rational make(__int128 num, __int128 den);

private:
    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace boxhelly
