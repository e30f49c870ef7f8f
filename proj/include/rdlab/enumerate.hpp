#pragma once

#include <rdlab/rational.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rdlab {

/// All rationals p/q in lowest terms with max(|p|, q) <= H, sorted
/// ascending. Contains 0 and is symmetric about it.
inline std::vector<Rational> enumerate_rationals(long long H) {
    if (H < 1) throw std::invalid_argument("enumerate_rationals: H must be >= 1");
    std::vector<Rational> out;
    out.emplace_back(0);
    for (long long q = 1; q <= H; ++q) {
        for (long long p = 1; p <= H; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.emplace_back(p, q);
            out.emplace_back(-p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rdlab
