#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cbsum {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
/// zero stored as 0/1. Because values are always canonical, equality is a
/// plain field comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Integer v) : num_(std::move(v)), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        Integer lhs = a.num_ * b.den_;
        Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (num_ == 0)
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Canonical text form: "p/q", or just "p" when the value is an integer.
    /// The sign, if any, sits on the numerator.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p" or "p/q" with an optional leading minus; q must be a
    /// positive integer literal. Throws std::invalid_argument otherwise.
    static Rational parse(std::string_view text) {
        auto fail = [&] {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        if (text.empty()) fail();

        auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash);
        if (num_part.empty()) fail();
        std::size_t i = (num_part[0] == '-') ? 1 : 0;
        if (i == num_part.size()) fail();
        for (; i < num_part.size(); ++i)
            if (num_part[i] < '0' || num_part[i] > '9') fail();

        Integer num{std::string(num_part)};
        Integer den = 1;
        if (slash != std::string_view::npos) {
            std::string_view den_part = text.substr(slash + 1);
            if (den_part.empty()) fail();
            for (char c : den_part)
                if (c < '0' || c > '9') fail();
            den = Integer{std::string(den_part)};
            if (den == 0) fail();
        }
        return Rational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    Integer num_;
    Integer den_;  // > 0 always

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& q) {
    return q.sign() < 0 ? -q : q;
}

/// q^e for any integer exponent; negative exponents invert (throws on zero base).
inline Rational pow(const Rational& q, long long e) {
    if (e < 0)
        return pow(q.reciprocal(), -e);
    Rational result(1);
    Rational base = q;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace cbsum
