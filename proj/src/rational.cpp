#include "rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "errors.hpp"

namespace boxhelly {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > i128(std::numeric_limits<std::int64_t>::max()) ||
        v < i128(std::numeric_limits<std::int64_t>::min())) {
        throw OverflowError("rational arithmetic overflowed 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    u128 g = gcd128(uabs128(num), u128(den));
    num /= i128(g);
    den /= i128(g);
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = make(i128(num), i128(den));
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                          i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                          i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidArgument("rational division by zero");
    return Rational::make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_));
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Consumes a run of digits into a 128-bit accumulator.
bool read_digits(std::string_view s, std::size_t& pos, i128& out, int& ndigits) {
    ndigits = 0;
    out = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (ndigits >= 37) throw ParseError("rational literal too long: '" + std::string(s) + "'");
        out = out * 10 + (s[pos] - '0');
        ++ndigits;
        ++pos;
    }
    return ndigits > 0;
}

i128 pow10_128(int e) {
    i128 r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    };

    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }

    i128 intpart = 0;
    int intdigits = 0;
    read_digits(text, pos, intpart, intdigits);

    if (pos < text.size() && text[pos] == '/') {
        // fraction form p/q
        if (intdigits == 0) return fail();
        ++pos;
        i128 den = 0;
        int dendigits = 0;
        if (!read_digits(text, pos, den, dendigits) || pos != text.size()) return fail();
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return make(neg ? -intpart : intpart, den);
    }

    // decimal form: digits [. digits] [exponent]
    i128 mantissa = intpart;
    int fracdigits = 0;
    bool sawdot = false;
    if (pos < text.size() && text[pos] == '.') {
        sawdot = true;
        ++pos;
        i128 frac = 0;
        read_digits(text, pos, frac, fracdigits);
        if (intdigits + fracdigits > 37) throw ParseError("rational literal too long: '" + std::string(text) + "'");
        mantissa = intpart * pow10_128(fracdigits) + frac;
    }
    if (intdigits == 0 && fracdigits == 0) return fail();

    int exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            eneg = text[pos] == '-';
            ++pos;
        }
        i128 ev = 0;
        int edigits = 0;
        if (!read_digits(text, pos, ev, edigits) || ev > 37) return fail();
        exponent = static_cast<int>(ev) * (eneg ? -1 : 1);
    }
    if (pos != text.size()) return fail();
    (void)sawdot;

    i128 num = neg ? -mantissa : mantissa;
    i128 den = pow10_128(fracdigits);
    if (exponent > 0) {
        if (intdigits + fracdigits + exponent > 37)
            throw ParseError("rational literal too long: '" + std::string(text) + "'");
        num *= pow10_128(exponent);
    } else if (exponent < 0) {
        if (fracdigits - exponent > 37)
            throw ParseError("rational literal too long: '" + std::string(text) + "'");
        den *= pow10_128(-exponent);
    }
    return make(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace boxhelly
