#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rdlab {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator positive,
/// numerator and denominator coprime, zero stored as 0/1. Equality is
/// structural, so canonical values can be deduplicated with ordered
/// containers.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
        canonicalize();
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(raw_tag{}, -num_, den_); }

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
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    // Canonical form makes equality structural.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer l = a.num_ * b.den_;
        Integer r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Height of p/q in lowest terms: max(|p|, q).
    Integer height() const {
        Integer n = abs(num_);
        return n > den_ ? n : den_;
    }

    /// Text form "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
    /// on anything else, including q = 0.
    static Rational parse(std::string_view text) {
        auto bad = [&] {
            return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        auto parse_int = [&](std::string_view s, bool allow_sign) {
            if (s.empty()) throw bad();
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) throw bad();
            for (std::size_t j = i; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9') throw bad();
            return Integer(std::string(s));
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text, true));
        Integer n = parse_int(text.substr(0, slash), true);
        Integer d = parse_int(text.substr(slash + 1), false);
        if (d == 0) throw bad();
        return Rational(std::move(n), std::move(d));
    }

private:
    struct raw_tag {};
    Rational(raw_tag, Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational abs(const Rational& q) { return q.is_negative() ? -q : q; }

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace rdlab
