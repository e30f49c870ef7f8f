#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rdlab {

/// Dense matrix over the 3-element field; entries in {0, 1, 2}.
struct F3Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> e; // row-major, rows * cols entries

    F3Matrix() = default;
    F3Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, 0) {}

    std::uint8_t& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    friend bool operator==(const F3Matrix&, const F3Matrix&) = default;
};

namespace f3 {

inline std::uint8_t neg(std::uint8_t a) { return static_cast<std::uint8_t>((3 - a) % 3); }
inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a + b) % 3); }
inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a * b) % 3); }
// 1 and 2 are their own inverses mod 3.
inline std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::domain_error("f3::inv of zero");
    return a;
}

} // namespace f3

/// Solution set of A v = b over the 3-element field, in parametric form.
/// The full set is particular + span(basis); it has 3^basis.size()
/// elements.
struct F3AffineSolution {
    std::vector<std::uint8_t> particular;
    std::vector<std::vector<std::uint8_t>> basis; // nullspace basis vectors

    /// The k-th solution (0 <= k < 3^basis.size()) in lexicographic order
    /// of the coefficient vector on the basis, first basis vector most
    /// significant.
    std::vector<std::uint8_t> nth(std::uint64_t k) const {
        std::vector<std::uint8_t> v = particular;
        for (std::size_t i = basis.size(); i-- > 0;) {
            std::uint8_t c = static_cast<std::uint8_t>(k % 3);
            k /= 3;
            if (c)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = f3::add(v[j], f3::mul(c, basis[i][j]));
        }
        return v;
    }

    std::uint64_t count() const {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) n *= 3;
        return n;
    }
};

/// Row-reduce a copy of m, returning (rref, pivot column per pivot row).
inline std::pair<F3Matrix, std::vector<std::size_t>> f3_rref(F3Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m.at(row, j), m.at(sel, j));
        std::uint8_t s = f3::inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = f3::mul(m.at(row, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            std::uint8_t f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f3::add(m.at(i, j), f3::mul(f3::neg(f), m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t f3_rank(const F3Matrix& m) { return f3_rref(m).second.size(); }

/// Solve A v = b over the 3-element field. Empty when inconsistent;
/// otherwise a particular solution (free variables zero) and a nullspace
/// basis ordered by free column.
inline std::optional<F3AffineSolution> f3_solve(const F3Matrix& a,
                                                const std::vector<std::uint8_t>& b) {
    if (b.size() != a.rows)
        throw std::invalid_argument("f3_solve: rhs length mismatch");
    F3Matrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto [r, pivots] = f3_rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols)
        return std::nullopt; // pivot in the rhs column: 0 = nonzero
    F3AffineSolution sol;
    sol.particular.assign(a.cols, 0);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        sol.particular[pivots[i]] = r.at(i, a.cols);
    }
    for (std::size_t j = 0; j < a.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<std::uint8_t> v(a.cols, 0);
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f3::neg(r.at(i, j));
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

} // namespace rdlab
