#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lht/bigrational.hpp"

namespace lht {

/// One term c·u^u·v^v of a LaurentPoly.
struct LaurentTerm {
    int u = 0;
    int v = 0;
    BigInt coeff;

    friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

/// Exact integer Laurent polynomial in u and v. Terms are kept sorted by
/// (u, v) exponent with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c);
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(const BigInt& coeff, int u_exp, int v_exp);
    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    static LaurentPoly from_terms(std::vector<LaurentTerm> terms);

    std::span<const LaurentTerm> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Units of Z[u^±1, v^±1] are exactly ±u^i v^j.
    bool is_unit() const;
    BigInt coefficient(int u_exp, int v_exp) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Non-negative powers; negative powers only for units.
    LaurentPoly pow(int exponent) const;
    /// Inverse of a unit.
    LaurentPoly unit_inverse() const;
    /// Multiplies every term by u^du v^dv.
    LaurentPoly shifted(int du, int dv) const;
    /// The substitution v -> 1/v.
    LaurentPoly invert_v() const;
    BigRational evaluate(const BigRational& u, const BigRational& v) const;
    /// Exact division; throws std::domain_error if b does not divide *this.
    LaurentPoly exact_divide(const LaurentPoly& b) const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

    /// Fused multiply-add into an unnormalized buffer; used by the series kernels.
    static void accumulate_product(const LaurentPoly& a, const LaurentPoly& b, std::vector<LaurentTerm>& out);

private:
    std::vector<LaurentTerm> terms_;
};

inline LaurentPoly zero_like(const LaurentPoly&) { return LaurentPoly(); }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1); }

/// Shorthand monomials.
inline LaurentPoly lp_u(int e = 1) { return LaurentPoly::monomial(1, e, 0); }
inline LaurentPoly lp_v(int e = 1) { return LaurentPoly::monomial(1, 0, e); }

}  // namespace lht
