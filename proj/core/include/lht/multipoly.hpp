#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lht/bigrational.hpp"

namespace lht {

using Exponents = std::vector<int>;

/// Exact polynomial in x_1..x_n over the rationals. Terms are keyed by
/// exponent vector in lexicographic order; no zero coefficients are stored.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 1);
    static MultiPoly constant(int nvars, const BigRational& c);
    /// x_i, 0-based.
    static MultiPoly variable(int nvars, int i);
    static MultiPoly monomial(const Exponents& e, const BigRational& c);

    int nvars() const { return nvars_; }
    const std::map<Exponents, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRational coefficient(const Exponents& e) const;
    /// Lex-largest term.
    std::pair<Exponents, BigRational> leading_term() const;
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const BigRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }

    MultiPoly pow(int e) const;
    BigRational evaluate(const std::vector<BigRational>& x) const;
    /// Renames x_i to x_{perm[i]}.
    MultiPoly permuted(const std::vector<int>& perm) const;

    struct Division;
    /// Lex leading-term division by a single divisor.
    Division divide(const MultiPoly& d) const;
    /// Throws std::logic_error on a nonzero remainder.
    MultiPoly exact_divide(const MultiPoly& d) const;

    std::string to_string() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void require_same_nvars(const MultiPoly& o) const;
    int nvars_;
    std::map<Exponents, BigRational> terms_;
};

struct MultiPoly::Division {
    MultiPoly quotient;
    MultiPoly remainder;
};

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.nvars()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.nvars(), 1); }
inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("det: mixed variable counts");
}
std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Δ(x) = Π_{i<j} (x_i - x_j).
MultiPoly vandermonde(int nvars);

}  // namespace lht
