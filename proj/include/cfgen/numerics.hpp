#pragma once

/**
 * @file numerics.hpp
 * @brief Exact integers and rationals.
 *
 * Integer is GMP's mpz_class. Rational is kept in lowest terms with a
 * strictly positive denominator, so equal values have equal representations
 * and comparison is plain member-wise comparison. Zero is 0/1.
 *
 * Decimal rendering is done by long division and truncates toward zero.
 */

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace cfgen {

using Integer = mpz_class;

inline Integer ipow(Integer base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T n) : den_(1) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>)
            num_ = static_cast<long>(n);
        else
            num_ = static_cast<unsigned long>(n);
    }
    Rational(Integer n) : num_(std::move(n)), den_(1) {}        // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        if (x.den_ == y.den_) return Rational(x.num_ + y.num_, x.den_);
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        if (x.is_zero() || y.is_zero()) return Rational();
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw division_by_zero();
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = cmp(Integer(x.num_ * y.den_), Integer(y.num_ * x.den_));
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// x^e by repeated squaring; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return Rational(1) / pow(-e);
        Rational result(1);
        Rational base = *this;
        auto k = static_cast<unsigned long>(e);
        while (k != 0) {
            if (k & 1UL) result *= base;
            k >>= 1U;
            if (k != 0) base *= base;
        }
        return result;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "-p/q", with "/q" omitted when q = 1.
    std::string to_string() const {
        std::string s = num_.get_str();
        if (den_ != 1) s += "/" + den_.get_str();
        return s;
    }

    /// Parses the format produced by to_string(). Whitespace is not allowed.
    static Rational parse(std::string_view text) {
        const auto bad = [&] { return usage_error("invalid rational \"" + std::string(text) + "\""); };
        const auto digits_ok = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        const std::string_view n = body.substr(0, slash);
        const std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!digits_ok(n) || !digits_ok(d)) throw bad();
        Integer num(std::string(n), 10);
        Integer den(std::string(d), 10);
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void normalize() {
        if (sgn(den_) == 0) throw division_by_zero();
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (sgn(num_) == 0) {
            den_ = 1;
            return;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational rat_normalize(Integer num, Integer den) { return Rational(std::move(num), std::move(den)); }

struct Decimal {
    std::string text;
    bool exact = false;  // the expansion terminated within the requested digits
    Rational remainder;  // x - value(text), always 0 <= |remainder| < 10^-digits
};

/// Decimal expansion of x truncated toward zero after `digits` fractional digits.
inline Decimal rat_to_decimal(const Rational& x, std::size_t digits) {
    if (digits == 0) throw usage_error("digits must be at least 1");
    Integer n = abs(x.num());
    const Integer& d = x.den();
    Integer q;
    Integer r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::string text = x.sign() < 0 ? "-" : "";
    text += q.get_str();
    text += '.';
    for (std::size_t i = 0; i < digits; ++i) {
        r *= 10;
        Integer digit;
        mpz_tdiv_qr(digit.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
        text += static_cast<char>('0' + digit.get_ui());
    }
    Decimal out;
    out.exact = sgn(r) == 0;
    Rational rem(r, Integer(d * ipow(10, digits)));
    out.remainder = x.sign() < 0 ? -rem : rem;
    out.text = std::move(text);
    return out;
}

/// Nearest `digits`-place decimal, ties away from zero.
inline std::string rat_round_decimal(const Rational& x, std::size_t digits) {
    if (digits == 0) throw usage_error("digits must be at least 1");
    const Rational half(Integer(1), Integer(2 * ipow(10, digits)));
    const std::string text = rat_to_decimal(x.abs() + half, digits).text;
    return x.sign() < 0 ? "-" + text : text;
}

/// Parses a plain decimal string ("-0.125") back into an exact Rational.
inline Rational parse_decimal(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational::parse(text);
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    digits += frac;
    const bool negative = !digits.empty() && digits.front() == '-';
    Rational whole = Rational::parse(negative ? digits.substr(1) : digits);
    Rational v = whole / Rational(ipow(10, frac.size()));
    return negative ? -v : v;
}

}  // namespace cfgen
