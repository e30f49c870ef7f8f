#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rdlab {

/// A Pythagorean triple p^2 + q^2 = r^2 with p < q; primitive iff
/// gcd(p, q) = 1.
struct PythTriple {
    long long p;
    long long q;
    long long r;

    friend bool operator==(const PythTriple&, const PythTriple&) = default;
    friend auto operator<=>(const PythTriple&, const PythTriple&) = default;
};

/// All primitive triples with hypotenuse <= bound, each once with p < q,
/// sorted by (r, p). Standard generation: m > n >= 1 coprime, m - n odd,
/// legs m^2 - n^2 and 2mn.
inline std::vector<PythTriple> primitive_triples(long long max_hypotenuse) {
    if (max_hypotenuse < 5)
        throw std::invalid_argument("primitive_triples: bound must be >= 5");
    std::vector<PythTriple> out;
    for (long long m = 2; m * m + 1 <= max_hypotenuse; ++m) {
        for (long long n = 1; n < m; ++n) {
            if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
            long long r = m * m + n * n;
            if (r > max_hypotenuse) break;
            long long a = m * m - n * n;
            long long b = 2 * m * n;
            out.push_back({std::min(a, b), std::max(a, b), r});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PythTriple& s, const PythTriple& t) {
                  return s.r != t.r ? s.r < t.r : s.p < t.p;
              });
    return out;
}

} // namespace rdlab
