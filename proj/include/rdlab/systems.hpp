#pragma once

#include <rdlab/multipoly.hpp>
#include <rdlab/valuation.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rdlab {

/// A named system of integer polynomials in a common variable set, with
/// the formal Jacobian precomputed row by row.
struct PolySystem {
    std::string name;
    std::size_t nvars = 0;
    std::vector<std::string> var_names;
    std::vector<MultiPoly> polys;
    std::vector<std::vector<MultiPoly>> jac; // jac[i][j] = d polys[i] / d var j

    void finish_jacobian() {
        jac.clear();
        for (const auto& p : polys) {
            std::vector<MultiPoly> row;
            for (std::size_t j = 0; j < nvars; ++j) row.push_back(p.derivative(j));
            jac.push_back(std::move(row));
        }
    }
};

namespace detail {

inline MultiPoly::Exponents exps5(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    return {a, b, c, d, e};
}
inline MultiPoly::Exponents exps4(unsigned a, unsigned b, unsigned c, unsigned d) {
    return {a, b, c, d};
}

} // namespace detail

/// Variables (X, Y, Z, T, U) in that order. Equations:
///   2(Y^4 + T^4) + X^4 + Z^4 - 2(X^2 + Z^2)(Y^2 + T^2)
///   U^2 + Y^2 - X^2 - Z^2
inline PolySystem three_and_one_system() {
    using detail::exps5;
    PolySystem sys;
    sys.name = "three-and-one";
    sys.nvars = 5;
    sys.var_names = {"X", "Y", "Z", "T", "U"};

    MultiPoly eq1(5);
    eq1.add_term(exps5(0, 4, 0, 0, 0), 2);  // 2Y^4
    eq1.add_term(exps5(0, 0, 0, 4, 0), 2);  // 2T^4
    eq1.add_term(exps5(4, 0, 0, 0, 0), 1);  // X^4
    eq1.add_term(exps5(0, 0, 4, 0, 0), 1);  // Z^4
    eq1.add_term(exps5(2, 2, 0, 0, 0), -2); // -2X^2Y^2
    eq1.add_term(exps5(2, 0, 0, 2, 0), -2); // -2X^2T^2
    eq1.add_term(exps5(0, 2, 2, 0, 0), -2); // -2Z^2Y^2
    eq1.add_term(exps5(0, 0, 2, 2, 0), -2); // -2Z^2T^2

    MultiPoly eq2(5);
    eq2.add_term(exps5(0, 0, 0, 0, 2), 1);  // U^2
    eq2.add_term(exps5(0, 2, 0, 0, 0), 1);  // Y^2
    eq2.add_term(exps5(2, 0, 0, 0, 0), -1); // -X^2
    eq2.add_term(exps5(0, 0, 2, 0, 0), -1); // -Z^2

    sys.polys = {std::move(eq1), std::move(eq2)};
    sys.finish_jacobian();
    return sys;
}

/// Variables (x, z, u, mu). The quartic pair
///   u^4  - (z^2 + 4x^2 + 1) u^2  + z^2
///   mu^4 - (z^2 + 4(x-a)^2 + 1) mu^2 + z^2
/// with a replaced by its residue mod 3^max_level, valid for evaluation
/// at any level <= max_level. Requires v3(a) >= 0.
inline PolySystem two_dist_pair_system(const Rational& a, unsigned max_level = 128) {
    using detail::exps4;
    if (v3(a) < ExtValuation(0))
        throw std::invalid_argument("two_dist_pair_system: v3(a) must be >= 0");
    Integer A = reduce_mod(a, max_level);
    PolySystem sys;
    sys.name = "two-dist-pair";
    sys.nvars = 4;
    sys.var_names = {"x", "z", "u", "mu"};

    MultiPoly eq1(4);
    eq1.add_term(exps4(0, 0, 4, 0), 1);  // u^4
    eq1.add_term(exps4(0, 2, 2, 0), -1); // -z^2 u^2
    eq1.add_term(exps4(2, 0, 2, 0), -4); // -4x^2 u^2
    eq1.add_term(exps4(0, 0, 2, 0), -1); // -u^2
    eq1.add_term(exps4(0, 2, 0, 0), 1);  // z^2

    // 4(x-a)^2 = 4x^2 - 8ax + 4a^2
    MultiPoly eq2(4);
    eq2.add_term(exps4(0, 0, 0, 4), 1);              // mu^4
    eq2.add_term(exps4(0, 2, 0, 2), -1);             // -z^2 mu^2
    eq2.add_term(exps4(2, 0, 0, 2), -4);             // -4x^2 mu^2
    eq2.add_term(exps4(1, 0, 0, 2), 8 * A);          // +8ax mu^2
    eq2.add_term(exps4(0, 0, 0, 2), -4 * A * A - 1); // -(4a^2+1) mu^2
    eq2.add_term(exps4(0, 2, 0, 0), 1);              // z^2

    sys.polys = {std::move(eq1), std::move(eq2)};
    sys.finish_jacobian();
    return sys;
}

/// Variables (x, z', u', mu'). The mod-3 reduction of the rescaled
/// quartic pair, where every term carrying a positive power of 3
/// vanishes:
///   u'^4  - z'^2 u'^2
///   mu'^4 - z'^2 mu'^2
/// Meaningful at level 1 only.
inline PolySystem scaled_two_dist_mod3_system() {
    using detail::exps4;
    PolySystem sys;
    sys.name = "scaled";
    sys.nvars = 4;
    sys.var_names = {"x", "z'", "u'", "mu'"};

    MultiPoly eq1(4);
    eq1.add_term(exps4(0, 0, 4, 0), 1);
    eq1.add_term(exps4(0, 2, 2, 0), -1);

    MultiPoly eq2(4);
    eq2.add_term(exps4(0, 0, 0, 4), 1);
    eq2.add_term(exps4(0, 2, 0, 2), -1);

    sys.polys = {std::move(eq1), std::move(eq2)};
    sys.finish_jacobian();
    return sys;
}

/// The residue pattern every four-distance solution forces on the
/// three-and-one variables: X, Y, Z, U nonzero and T zero mod 3.
inline bool guy_constraint(const std::vector<std::uint8_t>& v) {
    if (v.size() != 5)
        throw std::invalid_argument("guy_constraint: expected 5 residues");
    return v[0] != 0 && v[1] != 0 && v[2] != 0 && v[4] != 0 && v[3] == 0;
}

} // namespace rdlab
