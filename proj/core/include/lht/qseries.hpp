#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lht/laurent_poly.hpp"

namespace lht {

/// Power series in q truncated at degree cap (inclusive), with LaurentPoly
/// coefficients in u, v. Arithmetic between series requires equal caps.
class QSeries {
public:
    explicit QSeries(int cap);

    static QSeries one(int cap) { return constant(LaurentPoly(1), cap); }
    static QSeries constant(const LaurentPoly& c, int cap);
    /// c·q^degree; zero if degree > cap.
    static QSeries monomial(const LaurentPoly& c, int degree, int cap);

    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }
    void set(int degree, LaurentPoly c);
    void add_at(int degree, const LaurentPoly& c);

    bool is_zero() const;
    bool is_one() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const LaurentPoly& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const LaurentPoly& c) { return a *= c; }

    /// Multiplies by q^m (m >= 0) and truncates.
    QSeries shifted(int m) const;
    /// Requires the constant coefficient to be a unit (±u^i v^j).
    QSeries inverse() const;
    /// Exact quotient in the truncated ring; the divisor must be invertible.
    QSeries exact_divide(const QSeries& b) const { return *this * b.inverse(); }
    QSeries invert_v() const;
    /// Specializes u and v to integers, giving integer coefficients.
    QSeries specialize_uv(int u, int v) const;
    /// Re-truncates to a smaller cap.
    QSeries truncated(int new_cap) const;
    /// Partial sum Σ_{d<=cap} c_d(u,v) q^d at rational values.
    BigRational evaluate(const BigRational& q, const BigRational& u, const BigRational& v) const;

    /// Lowest degree at which the two series differ.
    std::optional<int> first_mismatch(const QSeries& o) const;

    std::string to_string() const;

    friend bool operator==(const QSeries& a, const QSeries& b);
    friend std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

private:
    void require_same_cap(const QSeries& o, const char* what) const;
    std::vector<LaurentPoly> coeffs_;
};

QSeries zero_like(const QSeries& s);
QSeries one_like(const QSeries& s);

/// (c q^m; q)_k = Π_{i<k} (1 - c q^{m+i}), truncated at cap.
QSeries qpoch_series(const LaurentPoly& c, int m, int k, int cap);
/// Π_{i<k} 1/(1 - c q^{m+i}), truncated at cap. Every factor must be
/// invertible as a power series.
QSeries qpoch_inverse_series(const LaurentPoly& c, int m, int k, int cap);
/// Gaussian binomial [n, k]_q truncated at cap; zero when k < 0 or k > n.
QSeries gauss_binomial(int n, int k, int cap);

/// Dense counter of monomials q^d u^a v^b with 0 <= d <= cap and
/// 0 <= a, b within fixed bounds; used by the enumerators.
class MonomialTally {
public:
    MonomialTally(int cap, int max_u, int max_v);
    void add(int q, int u, int v, std::int64_t count = 1);
    QSeries to_series() const;
    std::int64_t total() const;

private:
    std::size_t index(int q, int u, int v) const;
    int cap_, max_u_, max_v_;
    std::vector<std::int64_t> counts_;
};

/// Exact polynomial in q with integer coefficients (untruncated).
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);
    static QPolynomial constant(const BigInt& c);
    /// 1 - q^m.
    static QPolynomial one_minus_q_power(int m);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int d) const;

    QPolynomial& operator*=(const QPolynomial& o);
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Quotient and remainder of long division by a divisor with unit
    /// leading coefficient.
    std::pair<QPolynomial, QPolynomial> divide(const QPolynomial& divisor) const;
    /// Quotient; throws std::logic_error if the remainder is nonzero.
    QPolynomial exact_divide(const QPolynomial& divisor) const;

    /// q^shift · this as a truncated QSeries; requires no negative degree
    /// to survive with a nonzero coefficient.
    QSeries to_series(int cap, int shift = 0) const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace lht
