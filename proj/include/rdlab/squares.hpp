#pragma once

#include <rdlab/rational.hpp>

#include <array>
#include <cstdint>
#include <optional>

namespace rdlab {

namespace detail {

// Quadratic-residue tables for a cheap square pre-test. A miss proves the
// input is not a square; a hit still requires the exact root check.
template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> t{};
    for (std::size_t i = 0; i < M; ++i) t[(i * i) % M] = true;
    return t;
}

inline bool may_be_square(const Integer& n) {
    static constexpr auto mod64 = square_residues<64>();
    static constexpr auto mod63 = square_residues<63>();
    static constexpr auto mod65 = square_residues<65>();
    static constexpr auto mod11 = square_residues<11>();
    if (!mod64[static_cast<std::uint32_t>(n % 64u)]) return false;
    const auto r = static_cast<std::uint32_t>(n % 45045u); // 63 * 65 * 11
    return mod63[r % 63] && mod65[r % 65] && mod11[r % 11];
}

} // namespace detail

/// Floor of the square root of a nonnegative integer. Exact integer
/// arithmetic only.
inline Integer isqrt(const Integer& n) {
    if (n < 0)
        throw std::domain_error("isqrt: negative input");
    return sqrt(n);
}

/// The nonnegative r with r^2 = n, when n is a perfect square.
inline std::optional<Integer> is_perfect_square(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!detail::may_be_square(n)) return std::nullopt;
    Integer r = sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

/// The nonnegative rational r with r^2 = q, when q is a rational square.
/// In lowest terms q is a square iff numerator and denominator both are.
inline std::optional<Rational> is_rational_square(const Rational& q) {
    if (q.is_negative()) return std::nullopt;
    auto rn = is_perfect_square(q.num());
    if (!rn) return std::nullopt;
    auto rd = is_perfect_square(q.den());
    if (!rd) return std::nullopt;
    return Rational(std::move(*rn), std::move(*rd));
}

} // namespace rdlab
