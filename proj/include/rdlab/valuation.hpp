#pragma once

#include <rdlab/rational.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace rdlab {

/// A p-adic valuation value: an integer or the distinguished Infinity
/// (the valuation of zero). Infinity compares greater than every integer
/// and equal to itself.
class ExtValuation {
public:
    ExtValuation(long long v) : infinite_(false), value_(v) {}
    static ExtValuation infinity() { return ExtValuation(inf_tag{}); }

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_)
            throw std::domain_error("ExtValuation: Infinity has no finite value");
        return value_;
    }

    friend bool operator==(const ExtValuation& a, const ExtValuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtValuation& a, const ExtValuation& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    struct inf_tag {};
    explicit ExtValuation(inf_tag) : infinite_(true), value_(0) {}

    bool infinite_;
    long long value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtValuation& v) {
    return os << v.str();
}

namespace detail {

inline bool is_prime(unsigned long long p) {
    if (p < 2) return false;
    for (unsigned long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Number of factors of p in a nonzero integer.
inline long long factor_count(Integer n, unsigned long long p) {
    long long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

} // namespace detail

/// p-adic valuation of a rational: the k with q = p^k * r/s, p dividing
/// neither r nor s. vp(0) is Infinity.
inline ExtValuation vp(const Rational& q, unsigned long long p) {
    if (!detail::is_prime(p))
        throw std::invalid_argument("vp: p must be prime");
    if (q.is_zero()) return ExtValuation::infinity();
    // num and den are coprime, so at most one of them carries factors of p.
    long long vn = detail::factor_count(abs(q.num()), p);
    if (vn > 0) return ExtValuation(vn);
    return ExtValuation(-detail::factor_count(q.den(), p));
}

inline ExtValuation v3(const Rational& q) { return vp(q, 3); }

/// 3^k as an Integer.
inline Integer pow3(unsigned k) {
    Integer m = 1;
    for (unsigned i = 0; i < k; ++i) m *= 3;
    return m;
}

namespace detail {

/// Inverse of a modulo m (gcd(a, m) = 1), by extended Euclid.
inline Integer mod_inverse(Integer a, const Integer& m) {
    Integer r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Integer s0 = 0, s1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: not invertible");
    if (s0 < 0) s0 += m;
    return s0;
}

} // namespace detail

/// Reduces a 3-integral rational modulo 3^k: the unique residue r in
/// [0, 3^k) with den * r = num (mod 3^k). Rejects q with v3(q) < 0.
inline Integer reduce_mod(const Rational& q, unsigned k) {
    if (k == 0)
        throw std::invalid_argument("reduce_mod: k must be positive");
    if (q.den() % 3 == 0)
        throw std::domain_error("reduce_mod: not 3-integral");
    Integer m = pow3(k);
    Integer r = (q.num() % m) * detail::mod_inverse(q.den(), m) % m;
    if (r < 0) r += m;
    return r;
}

} // namespace rdlab
