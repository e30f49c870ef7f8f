#pragma once

#include <rdlab/rational.hpp>
#include <rdlab/unipoly.hpp>
#include <rdlab/valuation.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace rdlab {

/// A polynomial family (X(t), Y(t), Z(t), T(t)) of candidate
/// three-distance configurations.
struct Parametrization {
    UniPoly X, Y, Z, T;
};

/// The octic family, coefficients verbatim:
///   X = t^8 - 8t^7 + 12t^6 + 24t^5 - 10t^4 - 24t^3 + 12t^2 + 8t + 1
///   Y = 8t^7 - 16t^6 - 8t^5 - 8t^3 + 16t^2 + 8t
///   Z = t^8 + 12t^6 - 32t^5 - 10t^4 - 32t^3 + 12t^2 + 1
///   T = t^8 - 4t^6 + 22t^4 - 4t^2 + 1
inline Parametrization builtin_octic() {
    return {UniPoly::from_ints({1, 8, 12, -24, -10, 24, 12, -8, 1}),
            UniPoly::from_ints({0, 8, 16, -8, 0, -8, -16, 8}),
            UniPoly::from_ints({1, 0, 12, -32, -10, -32, 12, 0, 1}),
            UniPoly::from_ints({1, 0, -4, 0, 22, 0, -4, 0, 1})};
}

/// Exact values (X, Y, Z, T) at a rational parameter.
inline std::array<Rational, 4> eval_param(const Parametrization& par, const Rational& t) {
    return {par.X.eval(t), par.Y.eval(t), par.Z.eval(t), par.T.eval(t)};
}

/// 3-adic valuations of the four values at t.
inline std::array<ExtValuation, 4> valuation_profile(const Parametrization& par,
                                                     const Rational& t) {
    auto v = eval_param(par, t);
    return {v3(v[0]), v3(v[1]), v3(v[2]), v3(v[3])};
}

/// Whether 2(Y^4 + T^4) + X^4 + Z^4 - 2(X^2 + Z^2)(Y^2 + T^2) vanishes
/// identically all along the family. The residual has degree at most
/// 4 max deg, so vanishing at 4 max deg + 1 integer points proves the
/// identity; sampled residuals are kept for reporting.
struct IdentityReport {
    bool holds = false;
    std::vector<std::pair<Integer, Integer>> residuals; // (t, residual)
};

inline Integer identity_residual(const Parametrization& par, const Integer& t) {
    Integer X = par.X.eval(t), Y = par.Y.eval(t), Z = par.Z.eval(t), T = par.T.eval(t);
    Integer X2 = X * X, Y2 = Y * Y, Z2 = Z * Z, T2 = T * T;
    return 2 * (Y2 * Y2 + T2 * T2) + X2 * X2 + Z2 * Z2 - 2 * (X2 + Z2) * (Y2 + T2);
}

inline Rational identity_residual(const Parametrization& par, const Rational& t) {
    auto [X, Y, Z, T] = eval_param(par, t);
    Rational X2 = X * X, Y2 = Y * Y, Z2 = Z * Z, T2 = T * T;
    Rational two(2);
    return two * (Y2 * Y2 + T2 * T2) + X2 * X2 + Z2 * Z2 - two * (X2 + Z2) * (Y2 + T2);
}

inline IdentityReport verify_identity(const Parametrization& par) {
    long long d = 0;
    for (const UniPoly* p : {&par.X, &par.Y, &par.Z, &par.T})
        d = std::max(d, p->degree());
    if (d < 0) d = 0;
    IdentityReport rep;
    rep.holds = true;
    for (long long t = -2 * d; t <= 2 * d; ++t) {
        Integer r = identity_residual(par, Integer(t));
        if (r != 0) rep.holds = false;
        rep.residuals.emplace_back(Integer(t), std::move(r));
    }
    return rep;
}

/// The two-case valuation analysis against the requirement
/// v3(Z) < v3(T).
///
/// Case v3(t) < 0: when deg Z = deg T and both leading coefficients are
/// 3-adic units, the top terms dominate and force
/// v3(Z) = v3(T) = deg * v3(t), contradicting the requirement.
///
/// Case v3(t) >= 0: when T mod 3 is a nonzero constant on every residue
/// class of t, v3(T) = 0 while v3(Z) >= 0, again a contradiction.
///
/// Obstructed only when both cases close.
struct ObstructionReport {
    enum class Verdict { Obstructed, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;

    struct NegCase {
        long long deg_Z = -1;
        long long deg_T = -1;
        ExtValuation v3_lead_Z{0};
        ExtValuation v3_lead_T{0};
        bool contradiction = false;
    } case_neg;

    struct NonNegCase {
        std::array<std::uint8_t, 3> T_mod3{}; // value at t = 0, 1, 2 mod 3
        bool contradiction = false;
    } case_nonneg;
};

inline ObstructionReport obstruction_check(const Parametrization& par) {
    ObstructionReport rep;
    rep.case_neg.deg_Z = par.Z.degree();
    rep.case_neg.deg_T = par.T.degree();
    rep.case_neg.v3_lead_Z = v3(Rational(par.Z.leading()));
    rep.case_neg.v3_lead_T = v3(Rational(par.T.leading()));
    rep.case_neg.contradiction = rep.case_neg.deg_Z >= 0 &&
                                 rep.case_neg.deg_Z == rep.case_neg.deg_T &&
                                 rep.case_neg.v3_lead_Z == ExtValuation(0) &&
                                 rep.case_neg.v3_lead_T == ExtValuation(0);
    rep.case_nonneg.contradiction = true;
    std::uint8_t first = par.T.eval_mod3(0);
    for (std::uint8_t r = 0; r < 3; ++r) {
        std::uint8_t val = par.T.eval_mod3(r);
        rep.case_nonneg.T_mod3[r] = val;
        if (val == 0 || val != first) rep.case_nonneg.contradiction = false;
    }
    rep.verdict = rep.case_neg.contradiction && rep.case_nonneg.contradiction
                      ? ObstructionReport::Verdict::Obstructed
                      : ObstructionReport::Verdict::Inconclusive;
    return rep;
}

} // namespace rdlab
