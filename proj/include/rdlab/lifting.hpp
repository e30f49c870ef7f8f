#pragma once

#include <rdlab/f3.hpp>
#include <rdlab/systems.hpp>
#include <rdlab/valuation.hpp>

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

namespace rdlab {

/// A candidate solution vector with entries in [0, 3^level).
struct ResidueVec {
    unsigned level = 1;
    std::vector<Integer> entries;

    std::vector<std::uint8_t> mod3() const {
        std::vector<std::uint8_t> r(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            r[i] = static_cast<std::uint8_t>(entries[i] % 3);
        return r;
    }

    friend bool operator==(const ResidueVec&, const ResidueVec&) = default;
    friend auto operator<=>(const ResidueVec&, const ResidueVec&) = default;
};

/// Optional predicate on the mod-3 reduction of a vector; empty accepts
/// everything.
using ResidueConstraint = std::function<bool(const std::vector<std::uint8_t>&)>;

/// Residuals of every system polynomial at v, mod 3^v.level.
inline std::vector<Integer> eval_mod(const PolySystem& sys, const ResidueVec& v) {
    if (v.entries.size() != sys.nvars)
        throw std::invalid_argument("eval_mod: arity mismatch");
    if (v.level < 1) throw std::invalid_argument("eval_mod: level must be >= 1");
    Integer m = pow3(v.level);
    std::vector<Integer> out;
    out.reserve(sys.polys.size());
    for (const auto& p : sys.polys) out.push_back(p.eval_mod(v.entries, m));
    return out;
}

/// The formal Jacobian evaluated at v mod 3.
inline F3Matrix jacobian_mod3(const PolySystem& sys, const ResidueVec& v) {
    if (v.entries.size() != sys.nvars)
        throw std::invalid_argument("jacobian_mod3: arity mismatch");
    std::vector<Integer> r3(sys.nvars);
    for (std::size_t i = 0; i < sys.nvars; ++i) r3[i] = v.entries[i] % 3;
    F3Matrix m(sys.polys.size(), sys.nvars);
    for (std::size_t i = 0; i < sys.polys.size(); ++i)
        for (std::size_t j = 0; j < sys.nvars; ++j)
            m.at(i, j) = static_cast<std::uint8_t>(sys.jac[i][j].eval_mod(r3, 3));
    return m;
}

namespace detail {

/// The affine system for lifting base one level: Df(b) v = -f(b)/3^k
/// over the 3-element field. Empty when no lift exists. Throws when base
/// is not a solution at its own level.
inline std::optional<F3AffineSolution> lift_parametric(const PolySystem& sys,
                                                       const ResidueVec& base) {
    if (base.entries.size() != sys.nvars)
        throw std::invalid_argument("lift_solutions: arity mismatch");
    Integer mk = pow3(base.level);
    Integer mk1 = mk * 3;
    std::vector<std::uint8_t> rhs;
    rhs.reserve(sys.polys.size());
    for (const auto& p : sys.polys) {
        Integer r = p.eval_mod(base.entries, mk1);
        if (r % mk != 0)
            throw std::invalid_argument("lift_solutions: base is not a solution at its level");
        auto q = static_cast<std::uint8_t>(r / mk); // in {0, 1, 2}
        rhs.push_back(f3::neg(q));
    }
    return f3_solve(jacobian_mod3(sys, base), rhs);
}

} // namespace detail

/// Exactly the solutions at level k+1 whose reduction mod 3^k is base,
/// in lexicographic order of the lifting system's nullspace coordinates.
inline std::vector<ResidueVec> lift_solutions(const PolySystem& sys, const ResidueVec& base) {
    auto sol = detail::lift_parametric(sys, base);
    if (!sol) return {};
    Integer mk = pow3(base.level);
    std::uint64_t n = sol->count();
    std::vector<ResidueVec> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        auto v = sol->nth(k);
        ResidueVec rv{base.level + 1, base.entries};
        for (std::size_t j = 0; j < rv.entries.size(); ++j)
            if (v[j]) rv.entries[j] += Integer(v[j]) * mk;
        out.push_back(std::move(rv));
    }
    return out;
}

/// Number of lifts of base one level up, without materializing them.
inline std::uint64_t lift_count(const PolySystem& sys, const ResidueVec& base) {
    auto sol = detail::lift_parametric(sys, base);
    return sol ? sol->count() : 0;
}

/// All level-1 solutions of the system whose residues satisfy the
/// constraint, in lexicographic order.
inline std::vector<ResidueVec> level1_solutions(const PolySystem& sys,
                                                const ResidueConstraint& constraint = {}) {
    std::vector<ResidueVec> out;
    std::vector<std::uint8_t> v(sys.nvars, 0);
    for (;;) {
        if (!constraint || constraint(v)) {
            ResidueVec rv{1, std::vector<Integer>(v.begin(), v.end())};
            bool ok = true;
            for (const auto& r : eval_mod(sys, rv))
                if (r != 0) { ok = false; break; }
            if (ok) out.push_back(std::move(rv));
        }
        std::size_t i = sys.nvars;
        while (i > 0 && v[i - 1] == 2) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

/// counts[k-1] = number of level-k solutions lying over a constrained
/// level-1 solution, for k = 1..max_level. Breadth-first lifting; the
/// final level is counted per base without materializing its vectors.
inline std::vector<std::uint64_t> count_constrained(const PolySystem& sys,
                                                    const ResidueConstraint& constraint,
                                                    unsigned max_level) {
    if (max_level < 1)
        throw std::invalid_argument("count_constrained: max_level must be >= 1");
    std::vector<std::uint64_t> counts;
    std::vector<ResidueVec> cur = level1_solutions(sys, constraint);
    counts.push_back(cur.size());
    for (unsigned k = 1; k < max_level; ++k) {
        if (k + 1 == max_level) {
            std::uint64_t total = 0;
            for (const auto& b : cur) total += lift_count(sys, b);
            counts.push_back(total);
        } else {
            std::vector<ResidueVec> next;
            for (const auto& b : cur) {
                auto lifts = lift_solutions(sys, b);
                next.insert(next.end(), std::make_move_iterator(lifts.begin()),
                            std::make_move_iterator(lifts.end()));
            }
            counts.push_back(next.size());
            cur = std::move(next);
        }
    }
    return counts;
}

/// Result of the depth-first liftability search. Exhaustion (no witness,
/// budget not hit) means the constrained solution tree dies out above
/// the seeds.
struct LiftSearch {
    std::optional<ResidueVec> witness;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
};

/// Depth-first search for a solution mod 3^depth over a constrained
/// seed, children explored in lift order, backtracking on dead bases.
/// Every visited vector counts as one node against the budget.
inline LiftSearch lift_exists_to_depth(const PolySystem& sys, const ResidueConstraint& constraint,
                                       unsigned depth,
                                       std::optional<std::uint64_t> budget = std::nullopt) {
    if (depth < 1)
        throw std::invalid_argument("lift_exists_to_depth: depth must be >= 1");
    LiftSearch res;
    std::vector<ResidueVec> stack = level1_solutions(sys, constraint);
    std::reverse(stack.begin(), stack.end());
    while (!stack.empty()) {
        ResidueVec v = std::move(stack.back());
        stack.pop_back();
        ++res.nodes;
        if (budget && res.nodes > *budget) {
            res.budget_hit = true;
            return res;
        }
        if (v.level == depth) {
            res.witness = std::move(v);
            return res;
        }
        auto lifts = lift_solutions(sys, v);
        for (std::size_t i = lifts.size(); i-- > 0;)
            stack.push_back(std::move(lifts[i]));
    }
    return res;
}

/// Level-1 solutions satisfying the constraint, bucketed by the rank of
/// the Jacobian mod 3.
inline std::map<std::size_t, std::uint64_t> rank_census(const PolySystem& sys,
                                                        const ResidueConstraint& constraint = {}) {
    std::map<std::size_t, std::uint64_t> hist;
    for (const auto& v : level1_solutions(sys, constraint))
        ++hist[f3_rank(jacobian_mod3(sys, v))];
    return hist;
}

} // namespace rdlab
