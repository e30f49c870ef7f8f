#pragma once

#include <rdlab/enumerate.hpp>
#include <rdlab/filter.hpp>
#include <rdlab/geometry.hpp>
#include <rdlab/valuation.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rdlab {

/// One verified rational-distance point from a search.
struct PointRecord {
    Rational a;
    Rational x;
    Rational y;
    std::array<Rational, 4> distances;
    std::optional<LineTag> trivial_line;
    ExtValuation v3x{0};
    ExtValuation v3z{0};

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// Aggregate counters of one search or filter sweep over all coordinate
/// pairs. pruned + checked = total; fraction = pruned/total, exact.
struct SearchStats {
    std::uint64_t total_pairs = 0;
    std::uint64_t pruned_by_filter = 0;
    std::uint64_t checked = 0;
    std::uint64_t found = 0;
    Rational pruned_fraction{0};
};

/// Exhaustive scan over all coordinate pairs (x, y) of height <= H, in
/// (x, then y) order. With use_filter, pairs the 3-adic verdict excludes
/// skip the exact check. Records on the six trivial lines are tagged,
/// and dropped when exclude_trivial.
inline std::pair<std::vector<PointRecord>, SearchStats> search_rectangle(const Rational& a,
                                                                         long long H,
                                                                         bool use_filter = true,
                                                                         bool exclude_trivial = true) {
    Rectangle rect(a);
    auto coords = enumerate_rationals(H);
    std::vector<PointRecord> records;
    SearchStats st;
    Rational two(2);
    for (const Rational& x : coords) {
        for (const Rational& y : coords) {
            ++st.total_pairs;
            Rational z = two * y;
            if (use_filter && filter_verdict(a, x, z).excluded()) {
                ++st.pruned_by_filter;
                continue;
            }
            ++st.checked;
            Point p{x, y};
            auto rep = four_distance_check(rect, p);
            if (!rep) continue;
            PointRecord rec{a, x, y, {}, classify_trivial(rect, p), v3(x), v3(z)};
            for (int i = 0; i < 4; ++i) rec.distances[i] = *rep->dist[i];
            if (exclude_trivial && rec.trivial_line) continue;
            ++st.found;
            records.push_back(std::move(rec));
        }
    }
    if (st.total_pairs > 0)
        st.pruned_fraction = Rational(Integer(st.pruned_by_filter), Integer(st.total_pairs));
    return {std::move(records), st};
}

/// How much of the height-H candidate grid the 3-adic verdict excludes
/// for this a. Valuations are cached per coordinate; v3(z) = v3(y) since
/// v3(2) = 0.
inline SearchStats filter_stats(const Rational& a, long long H) {
    if (a.is_zero()) throw std::invalid_argument("filter_stats: a must be nonzero");
    auto coords = enumerate_rationals(H);
    bool a_unit = v3(a) == ExtValuation(0);
    std::vector<ExtValuation> val;
    val.reserve(coords.size());
    for (const Rational& c : coords) val.push_back(v3(c));
    SearchStats st;
    ExtValuation zero(0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = 0; j < coords.size(); ++j) {
            ++st.total_pairs;
            const ExtValuation& vx = val[i];
            const ExtValuation& vz = val[j];
            bool excluded;
            if (a_unit)
                excluded = (!(vx < zero) && !(vz < zero)) || vx == vz;
            else
                excluded = vx == vz && vx < zero;
            if (excluded)
                ++st.pruned_by_filter;
            else
                ++st.checked;
        }
    }
    if (st.total_pairs > 0)
        st.pruned_fraction = Rational(Integer(st.pruned_by_filter), Integer(st.total_pairs));
    return st;
}

/// A two-distance solution together with its distances to (0, 1/2) and
/// (0, -1/2).
struct TwoDistSolution {
    Point point;
    Rational r1;
    Rational r2;

    friend bool operator==(const TwoDistSolution&, const TwoDistSolution&) = default;
};

/// Two-distance solutions built from pairs of right triangles sharing a
/// leg A <= max_leg, with distinct other legs m < n: the point
/// (A/(n-m), (m+n)/(2(n-m))) has distances hyp1/(n-m) and hyp2/(n-m).
/// Deduplicated, sorted by (x, y); every output re-verifies under
/// two_distance_check.
inline std::vector<TwoDistSolution> gen_two_distance(long long max_leg) {
    if (max_leg < 12)
        throw std::invalid_argument("gen_two_distance: max_leg must be >= 12");
    std::vector<TwoDistSolution> out;
    for (long long A = 3; A <= max_leg; ++A) {
        // n is a mate of A iff A^2 = (h-n)(h+n): one (other leg,
        // hypotenuse) pair per same-parity divisor split of A^2
        std::vector<std::pair<long long, long long>> mates;
        long long A2 = A * A;
        for (long long d1 = 1; d1 < A; ++d1) {
            if (A2 % d1 != 0) continue;
            long long d2 = A2 / d1;
            if (((d1 ^ d2) & 1) != 0) continue;
            mates.emplace_back((d2 - d1) / 2, (d2 + d1) / 2);
        }
        std::sort(mates.begin(), mates.end());
        for (std::size_t i = 0; i < mates.size(); ++i) {
            for (std::size_t j = i + 1; j < mates.size(); ++j) {
                auto [m, h1] = mates[i];
                auto [n, h2] = mates[j];
                long long d = n - m;
                TwoDistSolution s{{Rational(A, d), Rational(m + n, 2 * d)},
                                  Rational(h1, d),
                                  Rational(h2, d)};
                out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TwoDistSolution& s, const TwoDistSolution& t) {
        return s.point < t.point;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rdlab
