#pragma once

#include <rdlab/rational.hpp>

#include <cstdint>
#include <vector>

namespace rdlab {

/// Univariate integer polynomial, coefficients constant-term first.
/// Trailing zero coefficients are trimmed; the zero polynomial is the
/// empty coefficient list with degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly from_ints(std::initializer_list<long long> coeffs) {
        std::vector<Integer> c;
        for (long long v : coeffs) c.emplace_back(v);
        return UniPoly(std::move(c));
    }

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
    Integer constant() const { return c_.empty() ? Integer(0) : c_.front(); }

    Integer eval(const Integer& t) const {
        Integer r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }

    Rational eval(const Rational& t) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * t + Rational(c_[i]);
        return r;
    }

    /// Coefficients reduced into {0, 1, 2}.
    std::vector<std::uint8_t> mod3_coeffs() const {
        std::vector<std::uint8_t> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Integer r = c_[i] % 3;
            if (r < 0) r += 3;
            out[i] = static_cast<std::uint8_t>(r);
        }
        return out;
    }

    /// Value mod 3 at a residue t in {0, 1, 2}.
    std::uint8_t eval_mod3(std::uint8_t t) const {
        unsigned r = 0;
        auto m = mod3_coeffs();
        for (std::size_t i = m.size(); i-- > 0;) r = (r * t + m[i]) % 3;
        return static_cast<std::uint8_t>(r);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

} // namespace rdlab
