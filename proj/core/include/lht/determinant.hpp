#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lht/bigrational.hpp"
#include "lht/laurent_poly.hpp"
#include "lht/qseries.hpp"

namespace lht {

template <class R>
using Matrix = std::vector<std::vector<R>>;

inline bool ring_is_zero(const BigRational& x) { return x.is_zero(); }
inline bool ring_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const QSeries& x) { return x.is_zero(); }

inline std::optional<BigRational> try_exact_divide(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

inline std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    try {
        return a.exact_divide(b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

// Only unit constant terms are invertible in the truncated ring.
inline std::optional<QSeries> try_exact_divide(const QSeries& a, const QSeries& b) {
    if (!b[0].is_unit()) return std::nullopt;
    return a * b.inverse();
}

inline void check_compatible(const BigRational&, const BigRational&) {}
inline void check_compatible(const LaurentPoly&, const LaurentPoly&) {}
inline void check_compatible(const QSeries& a, const QSeries& b) {
    if (a.cap() != b.cap()) throw std::invalid_argument("det: mixed-cap matrix");
}

namespace detail {

template <class R>
void check_square(const Matrix<R>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("det: matrix is not square");
    for (const auto& row : m)
        for (const auto& x : row) check_compatible(m[0][0], x);
}

// D[S] = determinant of the first |S| rows restricted to the column set S,
// expanded along its last row.
template <class R>
R det_subset_dp(const Matrix<R>& m, const R& one) {
    const int n = static_cast<int>(m.size());
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::optional<R>> d(static_cast<std::size_t>(full) + 1);
    d[0] = one;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int r = __builtin_popcount(s);
        const auto& row = m[r - 1];
        std::optional<R> acc;
        int greater = 0;
        for (int c = n - 1; c >= 0; --c) {
            if (!(s & (1u << c))) continue;
            const auto& sub = d[s & ~(1u << c)];
            if (sub && !ring_is_zero(row[c]) && !ring_is_zero(*sub)) {
                R term = row[c] * *sub;
                if (greater & 1) term = -term;
                if (acc)
                    *acc += term;
                else
                    acc = std::move(term);
            }
            ++greater;
        }
        if (acc && !ring_is_zero(*acc)) d[s] = std::move(acc);
    }
    return d[full] ? *d[full] : one - one;
}

// Fraction-free elimination; nullopt if some division is not available in R.
template <class R>
std::optional<R> det_bareiss(Matrix<R> a, const R& one) {
    const std::size_t n = a.size();
    R prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(a[k][k])) {
            std::size_t p = k + 1;
            while (p < n && ring_is_zero(a[p][k])) ++p;
            if (p == n) return one - one;
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = try_exact_divide(num, prev);
                if (!q) return std::nullopt;
                a[i][j] = std::move(*q);
            }
        }
        prev = a[k][k];
    }
    R result = a[n - 1][n - 1];
    if (negate) result = -result;
    return result;
}

}  // namespace detail

inline constexpr std::size_t kCofactorLimit = 6;

/// Exact determinant. `one` supplies the ring identity (and cap for QSeries),
/// so empty matrices are allowed.
template <class R>
R det(const Matrix<R>& m, const R& one) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    if (n <= kCofactorLimit) return detail::det_subset_dp(m, one);
    if (auto r = detail::det_bareiss(m, one)) return *r;
    if (n > 20) throw std::domain_error("det: no exact elimination available for this matrix");
    return detail::det_subset_dp(m, one);
}

template <class R>
R det(const Matrix<R>& m) {
    if (m.empty()) throw std::invalid_argument("det: empty matrix needs an explicit identity");
    return det(m, one_like(m[0][0]));
}

/// Forces the elimination path (falls back to cofactors when a pivot is not
/// divisible); exposed so the two methods can be compared.
template <class R>
R det_elimination(const Matrix<R>& m, const R& one) {
    detail::check_square(m);
    if (m.empty()) return one;
    if (auto r = detail::det_bareiss(m, one)) return *r;
    return detail::det_subset_dp(m, one);
}

template <class R>
R det_cofactor(const Matrix<R>& m, const R& one) {
    detail::check_square(m);
    if (m.empty()) return one;
    return detail::det_subset_dp(m, one);
}

}  // namespace lht
