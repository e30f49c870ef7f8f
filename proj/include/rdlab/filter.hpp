#pragma once

#include <rdlab/rational.hpp>
#include <rdlab/triples.hpp>
#include <rdlab/valuation.hpp>

#include <string>

namespace rdlab {

/// Outcome of the 3-adic exclusion test. Excluded is only emitted when the
/// hypotheses of the corresponding clause verifiably hold.
struct FilterVerdict {
    enum class Kind { Excluded, Undetermined };
    enum class Clause { None, BothNonNegative, EqualValuations };

    Kind kind;
    Clause clause;      // set when kind == Excluded
    std::string reason; // set when kind == Undetermined

    bool excluded() const { return kind == Kind::Excluded; }

    std::string str() const {
        if (kind == Kind::Undetermined)
            return reason.empty() ? "Undetermined" : "Undetermined(" + reason + ")";
        return clause == Clause::BothNonNegative ? "Excluded(BothNonNegative)"
                                                 : "Excluded(EqualValuations)";
    }
};

/// The 3-adic exclusion condition for a point (x, z/2) against the
/// rectangle side a. With v3(a) = 0 a rational-distance point must have
/// v3(x) < 0 or v3(z) < 0, and v3(x) != v3(z); either failure excludes.
/// With v3(a) != 0 only the a-independent sub-case v3(x) = v3(z) < 0
/// still excludes (its argument uses the single quartic for (x, z)).
inline FilterVerdict filter_verdict(const Rational& a, const Rational& x, const Rational& z) {
    if (a.is_zero())
        throw std::invalid_argument("filter_verdict: a must be nonzero");
    ExtValuation vx = v3(x);
    ExtValuation vz = v3(z);
    ExtValuation zero(0);
    if (v3(a) == zero) {
        if (!(vx < zero) && !(vz < zero))
            return {FilterVerdict::Kind::Excluded, FilterVerdict::Clause::BothNonNegative, ""};
        if (vx == vz)
            return {FilterVerdict::Kind::Excluded, FilterVerdict::Clause::EqualValuations, ""};
        return {FilterVerdict::Kind::Undetermined, FilterVerdict::Clause::None, ""};
    }
    if (vx == vz && vx < zero)
        return {FilterVerdict::Kind::Excluded, FilterVerdict::Clause::EqualValuations, ""};
    return {FilterVerdict::Kind::Undetermined, FilterVerdict::Clause::None,
            "hypothesis v3(a)=0 fails"};
}

/// The two-distance corollary as a checkable implication: if v3(x) = 0
/// then v3(z) < 0. Caller guarantees (x, z/2) is a two-distance solution.
inline bool corollary_two_distance(const Rational& x, const Rational& z) {
    if (v3(x) != ExtValuation(0)) return true;
    return v3(z) < ExtValuation(0);
}

/// The ratio 2t/(1 - t^2); rejects the poles t = +-1 and t = 0.
inline Rational bu_ratio(const Rational& t) {
    Rational one(1);
    if (t.is_zero() || t == one || t == -one)
        throw std::invalid_argument("bu_ratio: t must avoid 0 and +-1");
    return Rational(2) * t / (one - t * t);
}

/// The ratio A/B with A = p1 q2 + p2 q1, B = p1 p2 + q1 q2, in lowest
/// terms.
inline Rational sy_ratio(const PythTriple& t1, const PythTriple& t2) {
    Integer A = Integer(t1.p) * t2.q + Integer(t2.p) * t1.q;
    Integer B = Integer(t1.p) * t2.p + Integer(t1.q) * t2.q;
    return Rational(A, B);
}

} // namespace rdlab
