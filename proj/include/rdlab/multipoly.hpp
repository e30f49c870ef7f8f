#pragma once

#include <rdlab/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdlab {

/// Sparse integer polynomial in nvars variables: exponent vector ->
/// nonzero coefficient. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Integer>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Integer& coeff) {
        if (exps.size() != nvars_)
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (coeff == 0) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Formal partial derivative with respect to variable var.
    MultiPoly derivative(std::size_t var) const {
        if (var >= nvars_)
            throw std::invalid_argument("MultiPoly: derivative variable out of range");
        MultiPoly d(nvars_);
        for (const auto& [exps, coeff] : terms_) {
            if (exps[var] == 0) continue;
            Exponents e = exps;
            Integer c = coeff * e[var];
            --e[var];
            d.add_term(e, c);
        }
        return d;
    }

    /// Exact evaluation over the integers.
    Integer eval(const std::vector<Integer>& at) const {
        if (at.size() != nvars_)
            throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
        Integer total = 0;
        for (const auto& [exps, coeff] : terms_) {
            Integer t = coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < exps[i]; ++k) t *= at[i];
            total += t;
        }
        return total;
    }

    /// Evaluation with every product reduced mod m > 0; result in [0, m).
    Integer eval_mod(const std::vector<Integer>& at, const Integer& m) const {
        if (at.size() != nvars_)
            throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
        if (m <= 0) throw std::invalid_argument("MultiPoly: modulus must be positive");
        Integer total = 0;
        for (const auto& [exps, coeff] : terms_) {
            Integer t = coeff % m;
            if (t < 0) t += m;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < exps[i]; ++k) t = t * at[i] % m;
            total = (total + t) % m;
        }
        return total;
    }

private:
    std::size_t nvars_;
    std::map<Exponents, Integer> terms_;
};

} // namespace rdlab
