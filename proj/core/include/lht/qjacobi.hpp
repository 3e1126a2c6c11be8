#pragma once

#include <string>
#include <vector>

#include "lht/bigrational.hpp"
#include "lht/multipoly.hpp"
#include "lht/partition.hpp"
#include "lht/qseries.hpp"

namespace lht {

/// Parameters of the little q-Jacobi family. from_uv sets a = -uv, b = -u/v.
struct SpecParams {
    BigRational q;
    BigRational a;
    BigRational b;

    static SpecParams from_ab(BigRational q, BigRational a, BigRational b);
    static SpecParams from_uv(const BigRational& q, const BigRational& u, const BigRational& v);
    std::string to_string() const;
};

/// (c; q)_k at rationals.
BigRational qpoch(const BigRational& c, const BigRational& q, int k);
/// Gaussian binomial at a rational q; zero outside 0 <= k <= n.
BigRational qbinomial(int n, int k, const BigRational& q);

/// Dense univariate polynomial over the rationals, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);
    static UniPoly x_power(int n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    BigRational coefficient(int d) const;
    BigRational evaluate(const BigRational& x) const;
    /// Σ |c_i|, an upper bound for |f(x)| on [0, 1].
    BigRational abs_coefficient_sum() const;
    /// The polynomial in variable `var` of an nvars-variable ring.
    MultiPoly in_variable(int nvars, int var) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const BigRational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// A_n, C_n and the derived b_n = A_n + C_n, λ_n = A_{n-1} C_n.
struct RecurrenceCoefficients {
    BigRational A, C, b, lambda;
};
RecurrenceCoefficients recurrence_coefficients(int n, const SpecParams& p);

/// Monic p_n(x; a, b; q) from the three-term recurrence.
UniPoly little_q_jacobi_recurrence(int n, const SpecParams& p);
/// Monic p_n(x; a, b; q) from the terminating 2φ1 sum.
UniPoly little_q_jacobi_hypergeometric(int n, const SpecParams& p);
/// Both constructions; throws std::logic_error if they differ.
UniPoly little_q_jacobi(int n, const SpecParams& p);

/// μ_{n,k}: coefficient of p_k in x^n. ν_{n,k}: coefficient of x^k in p_n.
BigRational mu_mixed(int n, int k, const SpecParams& p);
BigRational nu_mixed(int n, int k, const SpecParams& p);
/// The same at a = -uv, b = -u/v as q-series.
QSeries mu_mixed_series(int n, int k, int cap);
QSeries nu_mixed_series(int n, int k, int cap);
/// μ_{n,k} = AL_{n,n-k} and ν_{n,k} = (-1)^{n-k} L_{n,n-k} up to cap.
bool mu_vs_alhc(int n, int k, int cap);
bool nu_vs_lhp(int n, int k, int cap);

struct BoundedValue {
    BigRational value;
    BigRational bound;
};

/// w(k) = (bq)_k/(q)_k (aq)^k.
BigRational functional_weight(int k, const SpecParams& p);
/// Σ_{k<K} w(k) f(q^k) with a geometric bound on the omitted tail.
BoundedValue functional_univariate(const UniPoly& f, const SpecParams& p, int terms);

/// det(p_{λ_j+n-j}(x_i)) / Δ(x).
MultiPoly multivariate_p(const Partition& lambda, int n, const SpecParams& p);
/// det(x_i^{λ_j+n-j}) / Δ(x).
MultiPoly schur_poly(const Partition& lambda, int n);

/// det(μ_{λ_i+n-i, μ_j+n-j}) and det(ν_{λ_i+n-i, μ_j+n-j}).
BigRational mixed_moment_M(const Partition& lambda, const Partition& mu, int n, const SpecParams& p);
BigRational dual_N(const Partition& lambda, const Partition& mu, int n, const SpecParams& p);
QSeries mixed_moment_M_series(const Partition& lambda, const Partition& mu, int n, int cap);
QSeries dual_N_series(const Partition& lambda, const Partition& mu, int n, int cap);

/// Product formulas for M_λ = M_{λ,∅} and N_λ = N_{λ,∅} at rationals.
BigRational moment_closed(const Partition& lambda, int n, const SpecParams& p);
BigRational dual_moment_closed(const Partition& lambda, int n, const SpecParams& p);

/// s_λ = Σ M_{λ,μ} p_μ and p_λ = Σ N_{λ,μ} s_μ exactly at p; then, as
/// series to cap, M_{λ,μ} = LS_{λ/μ}^{(n,≥,>)} and
/// N_{λ,μ} = (-1)^{|λ/μ|} LS_{λ/μ}^{(n,<,≤)} for every μ ⊆ λ.
bool expansion_check(const Partition& lambda, int n, const SpecParams& p, int cap);

/// Determinantal M_λ, N_λ as series against the straight-shape products,
/// plus the rational product formulas against the determinants at p.
bool moment_product_check(const Partition& lambda, int n, int cap);
bool moment_closed_check(const Partition& lambda, int n, const SpecParams& p);

struct SelbergResult {
    BigRational lhs;     ///< partial n-fold sum with s_λ
    BigRational norm;    ///< partial n-fold sum with 1
    BigRational ratio;   ///< lhs / norm
    BigRational closed;  ///< product formula for M_λ
    BigRational rhs;     ///< closed · norm
    BigRational bound;   ///< certified bound on |ratio - true ratio|
    bool within_bound() const;
};
/// Sums over k_i < terms of s_λ(q^k) Δ(q^k)² Π w(k_i).
SelbergResult selberg_check(const Partition& lambda, int n, const SpecParams& p, int terms);

/// The lemma for det(1/((a x_j)_i (b/x_j)_i)) and its polynomial forms.
bool det_lemma_check(const std::vector<BigRational>& x, const SpecParams& p);
/// The evaluation of det(x_j^i (b/x_j)_i / (a x_j)_i) and its polynomial form.
bool det_prop_check(const std::vector<BigRational>& x, const SpecParams& p);

}  // namespace lht
