#include "lht/qjacobi.hpp"

#include <stdexcept>

#include "lht/determinant.hpp"
#include "lht/lecture_hall.hpp"
#include "lht/tableau.hpp"

namespace lht {

namespace {

BigRational nonzero(BigRational d, const char* what) {
    if (d.is_zero()) throw std::domain_error(std::string(what) + ": vanishing denominator at these parameters");
    return d;
}

int choose2(int n) { return n * (n - 1) / 2; }

BigRational sign(int e) { return (e & 1) ? BigRational(-1) : BigRational(1); }

void require_length(const Partition& lambda, int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": need n >= 1");
    if (lambda.length() > n) throw std::invalid_argument(std::string(what) + ": shape has more than n rows");
}

QSeries signed_series(QSeries s, int e) { return (e & 1) ? -s : s; }

LaurentPoly minus_uv() { return LaurentPoly::monomial(BigInt(-1), 1, 1); }
LaurentPoly u_squared() { return LaurentPoly::monomial(BigInt(1), 2, 0); }

// Entry (i, j) of the moment matrices: indices λ_i+n-i and μ_j+n-j.
template <class R, class F>
Matrix<R> moment_matrix(const Partition& lambda, const Partition& mu, int n, F entry) {
    Matrix<R> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1].push_back(entry(lambda[i] + n - i, mu[j] + n - j));
    return m;
}

// ∏_{i<j} (q^{λ_j+n-j} - q^{λ_i+n-i}) / (q^{i-1} - q^{j-1})
BigRational vandermonde_quotient(const Partition& lambda, int n, const BigRational& q) {
    BigRational r = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            r *= q.pow(lambda[j] + n - j) - q.pow(lambda[i] + n - i);
            r /= q.pow(i - 1) - q.pow(j - 1);
        }
    return r;
}

MultiPoly bialternant(int n, const std::vector<UniPoly>& columns) {
    Matrix<MultiPoly> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i].push_back(columns[j].in_variable(n, i));
    return det(m, MultiPoly::constant(n, 1)).exact_divide(vandermonde(n));
}

}  // namespace

SpecParams SpecParams::from_ab(BigRational q, BigRational a, BigRational b) {
    if (q.sign() <= 0 || q >= BigRational(1)) throw std::invalid_argument("need 0 < q < 1");
    return {std::move(q), std::move(a), std::move(b)};
}

SpecParams SpecParams::from_uv(const BigRational& q, const BigRational& u, const BigRational& v) {
    if (v.is_zero()) throw std::invalid_argument("need v != 0");
    return from_ab(q, -(u * v), -(u / v));
}

std::string SpecParams::to_string() const {
    return "q=" + q.to_string() + " a=" + a.to_string() + " b=" + b.to_string();
}

BigRational qpoch(const BigRational& c, const BigRational& q, int k) {
    BigRational r = 1, t = c;
    for (int i = 0; i < k; ++i) {
        r *= BigRational(1) - t;
        t *= q;
    }
    return r;
}

BigRational qbinomial(int n, int k, const BigRational& q) {
    if (k < 0 || k > n) return 0;
    return qpoch(q, q, n) / (qpoch(q, q, k) * qpoch(q, q, n - k));
}

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x_power(int n) {
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coefficient(int d) const {
    return d >= 0 && d <= degree() ? coeffs_[d] : BigRational(0);
}

BigRational UniPoly::evaluate(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRational UniPoly::abs_coefficient_sum() const {
    BigRational s = 0;
    for (const auto& c : coeffs_) s += c.abs();
    return s;
}

MultiPoly UniPoly::in_variable(int nvars, int var) const {
    MultiPoly r(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int d = 0; d <= degree(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        e[var] = d;
        r += MultiPoly::monomial(e, coeffs_[d]);
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        if (coeffs_[d].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[d].to_string() + ")";
        if (d > 0) s += d == 1 ? "*x" : "*x^" + std::to_string(d);
    }
    return s;
}

RecurrenceCoefficients recurrence_coefficients(int n, const SpecParams& p) {
    const auto& [q, a, b] = p;
    const BigRational ab = a * b;
    auto A = [&](int m) {
        return q.pow(m) * (1 - a * q.pow(m + 1)) * (1 - ab * q.pow(m + 1)) /
               nonzero((1 - ab * q.pow(2 * m + 1)) * (1 - ab * q.pow(2 * m + 2)), "A_n");
    };
    auto C = [&](int m) {
        if (m == 0) return BigRational(0);
        return a * q.pow(m) * (1 - q.pow(m)) * (1 - b * q.pow(m)) /
               nonzero((1 - ab * q.pow(2 * m)) * (1 - ab * q.pow(2 * m + 1)), "C_n");
    };
    RecurrenceCoefficients r{A(n), C(n), 0, 0};
    r.b = r.A + r.C;
    r.lambda = n == 0 ? BigRational(0) : A(n - 1) * r.C;
    return r;
}

UniPoly little_q_jacobi_recurrence(int n, const SpecParams& p) {
    if (n < 0) throw std::invalid_argument("little_q_jacobi: negative degree");
    UniPoly prev, cur(std::vector<BigRational>{1});
    const UniPoly x = UniPoly::x_power(1);
    for (int m = 0; m < n; ++m) {
        const auto rc = recurrence_coefficients(m, p);
        UniPoly next = x * cur - cur * rc.b - prev * rc.lambda;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly little_q_jacobi_hypergeometric(int n, const SpecParams& p) {
    if (n < 0) throw std::invalid_argument("little_q_jacobi: negative degree");
    const auto& [q, a, b] = p;
    const BigRational ab = a * b;
    const BigRational pre = qpoch(a * q, q, n) * sign(n) * q.pow(choose2(n)) /
                            nonzero(qpoch(ab * q.pow(n + 1), q, n), "little_q_jacobi");
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    BigRational term = 1;  // (q^{-n})_k (abq^{n+1})_k / ((q)_k (aq)_k) q^k
    for (int k = 0; k <= n; ++k) {
        c[k] = pre * term;
        term *= (1 - q.pow(k - n)) * (1 - ab * q.pow(n + 1 + k)) * q;
        term /= nonzero((1 - q.pow(k + 1)) * (1 - a * q.pow(k + 1)), "little_q_jacobi");
    }
    return UniPoly(std::move(c));
}

UniPoly little_q_jacobi(int n, const SpecParams& p) {
    UniPoly r = little_q_jacobi_recurrence(n, p);
    if (r != little_q_jacobi_hypergeometric(n, p))
        throw std::logic_error("little_q_jacobi: recurrence and hypergeometric forms disagree");
    return r;
}

BigRational mu_mixed(int n, int k, const SpecParams& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("mu_mixed: negative index");
    if (k > n) return 0;
    const auto& [q, a, b] = p;
    return qbinomial(n, k, q) * qpoch(a * q.pow(k + 1), q, n - k) /
           nonzero(qpoch(a * b * q.pow(2 * k + 2), q, n - k), "mu_mixed");
}

BigRational nu_mixed(int n, int k, const SpecParams& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("nu_mixed: negative index");
    if (k > n) return 0;
    const auto& [q, a, b] = p;
    return sign(n - k) * q.pow(choose2(n - k)) * qbinomial(n, k, q) * qpoch(a * q.pow(k + 1), q, n - k) /
           nonzero(qpoch(a * b * q.pow(n + k + 1), q, n - k), "nu_mixed");
}

QSeries mu_mixed_series(int n, int k, int cap) {
    if (n < 0 || k < 0) throw std::invalid_argument("mu_mixed_series: negative index");
    if (k > n) return QSeries(cap);
    QSeries r = gauss_binomial(n, k, cap);
    r *= qpoch_series(minus_uv(), k + 1, n - k, cap);
    r *= qpoch_inverse_series(u_squared(), 2 * k + 2, n - k, cap);
    return r;
}

QSeries nu_mixed_series(int n, int k, int cap) {
    if (n < 0 || k < 0) throw std::invalid_argument("nu_mixed_series: negative index");
    if (k > n) return QSeries(cap);
    QSeries r = gauss_binomial(n, k, cap);
    r *= qpoch_series(minus_uv(), k + 1, n - k, cap);
    r *= qpoch_inverse_series(u_squared(), n + k + 1, n - k, cap);
    return signed_series(r.shifted(choose2(n - k)), n - k);
}

bool mu_vs_alhc(int n, int k, int cap) {
    if (k < 0 || k > n) throw std::invalid_argument("mu_vs_alhc: need 0 <= k <= n");
    return mu_mixed_series(n, k, cap) == genfun_enum(Variant::AL, n, n - k, cap);
}

bool nu_vs_lhp(int n, int k, int cap) {
    if (k < 0 || k > n) throw std::invalid_argument("nu_vs_lhp: need 0 <= k <= n");
    return nu_mixed_series(n, k, cap) == signed_series(genfun_enum(Variant::L, n, n - k, cap), n - k);
}

BigRational functional_weight(int k, const SpecParams& p) {
    const auto& [q, a, b] = p;
    return qpoch(b * q, q, k) / qpoch(q, q, k) * (a * q).pow(k);
}

namespace {

// For k >= K, |w(k+1)/w(k)| <= r; returns r or throws if the majorant does
// not converge.
BigRational tail_ratio(const SpecParams& p, int terms) {
    const auto& [q, a, b] = p;
    const BigRational qk = q.pow(terms + 1);
    BigRational r = (a * q).abs() * (1 + b.abs() * qk) / (1 - qk);
    if (r >= BigRational(1))
        throw std::domain_error("functional: geometric tail majorant does not converge; increase terms or shrink |aq|");
    return r;
}

}  // namespace

BoundedValue functional_univariate(const UniPoly& f, const SpecParams& p, int terms) {
    if (terms < 1) throw std::invalid_argument("functional_univariate: need terms >= 1");
    const BigRational r = tail_ratio(p, terms);
    BigRational sum = 0, qk = 1;
    for (int k = 0; k < terms; ++k) {
        if (!f.is_zero()) sum += functional_weight(k, p) * f.evaluate(qk);
        qk *= p.q;
    }
    const BigRational bound = f.abs_coefficient_sum() * functional_weight(terms, p).abs() / (1 - r);
    return {sum, bound};
}

MultiPoly multivariate_p(const Partition& lambda, int n, const SpecParams& p) {
    require_length(lambda, n, "multivariate_p");
    std::vector<UniPoly> cols;
    for (int j = 1; j <= n; ++j) cols.push_back(little_q_jacobi(lambda[j] + n - j, p));
    return bialternant(n, cols);
}

MultiPoly schur_poly(const Partition& lambda, int n) {
    require_length(lambda, n, "schur_poly");
    std::vector<UniPoly> cols;
    for (int j = 1; j <= n; ++j) cols.push_back(UniPoly::x_power(lambda[j] + n - j));
    return bialternant(n, cols);
}

BigRational mixed_moment_M(const Partition& lambda, const Partition& mu, int n, const SpecParams& p) {
    require_length(lambda, n, "mixed_moment_M");
    require_length(mu, n, "mixed_moment_M");
    auto m = moment_matrix<BigRational>(lambda, mu, n, [&](int r, int c) { return mu_mixed(r, c, p); });
    return det(m, BigRational(1));
}

BigRational dual_N(const Partition& lambda, const Partition& mu, int n, const SpecParams& p) {
    require_length(lambda, n, "dual_N");
    require_length(mu, n, "dual_N");
    auto m = moment_matrix<BigRational>(lambda, mu, n, [&](int r, int c) { return nu_mixed(r, c, p); });
    return det(m, BigRational(1));
}

QSeries mixed_moment_M_series(const Partition& lambda, const Partition& mu, int n, int cap) {
    require_length(lambda, n, "mixed_moment_M_series");
    require_length(mu, n, "mixed_moment_M_series");
    auto m = moment_matrix<QSeries>(lambda, mu, n, [&](int r, int c) { return mu_mixed_series(r, c, cap); });
    return det(m, QSeries::one(cap));
}

QSeries dual_N_series(const Partition& lambda, const Partition& mu, int n, int cap) {
    require_length(lambda, n, "dual_N_series");
    require_length(mu, n, "dual_N_series");
    auto m = moment_matrix<QSeries>(lambda, mu, n, [&](int r, int c) { return nu_mixed_series(r, c, cap); });
    return det(m, QSeries::one(cap));
}

BigRational moment_closed(const Partition& lambda, int n, const SpecParams& p) {
    require_length(lambda, n, "moment_closed");
    const auto& [q, a, b] = p;
    BigRational r = vandermonde_quotient(lambda, n, q);
    for (int i = 1; i <= n; ++i)
        r *= qpoch(a * q.pow(n - i + 1), q, lambda[i]) /
             nonzero(qpoch(a * b * q.pow(2 * n - i + 1), q, lambda[i]), "moment_closed");
    return r;
}

BigRational dual_moment_closed(const Partition& lambda, int n, const SpecParams& p) {
    require_length(lambda, n, "dual_moment_closed");
    const auto& [q, a, b] = p;
    const BigRational ab = a * b;
    BigRational r = sign(lambda.size()) * q.pow(n_stat(lambda.conjugate()) - n_stat(lambda)) *
                    vandermonde_quotient(lambda, n, q);
    for (int i = 1; i <= n; ++i)
        r *= qpoch(a * q.pow(n - i + 1), q, lambda[i]) /
             nonzero(qpoch(ab * q.pow(n - i + 1 + lambda[i]), q, n - i + lambda[i]), "dual_moment_closed");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r *= 1 - ab * q.pow(2 * n + lambda[i] + lambda[j] - i - j + 1);
    return r;
}

bool expansion_check(const Partition& lambda, int n, const SpecParams& p, int cap) {
    require_length(lambda, n, "expansion_check");
    const auto inner = sub_partitions(lambda);
    MultiPoly s_sum(n), p_sum(n);
    for (const auto& mu : inner) {
        s_sum += multivariate_p(mu, n, p) * mixed_moment_M(lambda, mu, n, p);
        p_sum += schur_poly(mu, n) * dual_N(lambda, mu, n, p);
    }
    if (s_sum != schur_poly(lambda, n) || p_sum != multivariate_p(lambda, n, p)) return false;
    for (const auto& mu : inner) {
        const SkewShape shape(lambda, mu);
        if (mixed_moment_M_series(lambda, mu, n, cap) != ls_series(shape, OrderType::ge_gt(n), cap)) return false;
        const QSeries dual = signed_series(ls_series(shape, OrderType::lt_le(n), cap), shape.size());
        if (dual_N_series(lambda, mu, n, cap) != dual) return false;
    }
    return true;
}

bool moment_product_check(const Partition& lambda, int n, int cap) {
    require_length(lambda, n, "moment_product_check");
    const Partition empty;
    if (mixed_moment_M_series(lambda, empty, n, cap) != ls_product(lambda, OrderType::ge_gt(n), cap)) return false;
    const QSeries dual = signed_series(ls_product(lambda, OrderType::lt_le(n), cap), lambda.size());
    return dual_N_series(lambda, empty, n, cap) == dual;
}

bool moment_closed_check(const Partition& lambda, int n, const SpecParams& p) {
    const Partition empty;
    return mixed_moment_M(lambda, empty, n, p) == moment_closed(lambda, n, p) &&
           dual_N(lambda, empty, n, p) == dual_moment_closed(lambda, n, p);
}

bool SelbergResult::within_bound() const { return (ratio - closed).abs() <= bound; }

// With x_i = q^{k_i}, x_i^α d_q x_i contributes (aq)^{k_i} and the infinite
// products reduce to (bq)_k/(q)_k times a constant that cancels in the ratio;
// this is w(k). |s_λ| <= s_λ(1,..,1) and Δ² <= 1 on [0,1]^n, so the omitted
// tuples (some k_i >= K) contribute at most S · n · W_tail · W_all^{n-1}.
SelbergResult selberg_check(const Partition& lambda, int n, const SpecParams& p, int terms) {
    require_length(lambda, n, "selberg_check");
    if (n > 3) throw std::invalid_argument("selberg_check: need n <= 3");
    if (terms < 1) throw std::invalid_argument("selberg_check: need terms >= 1");
    const BigRational r = tail_ratio(p, terms);
    const MultiPoly schur = schur_poly(lambda, n);
    const MultiPoly delta2 = vandermonde(n).pow(2);

    std::vector<BigRational> w, qk;
    BigRational w_head = 0, x = 1;
    for (int k = 0; k < terms; ++k) {
        w.push_back(functional_weight(k, p));
        w_head += w.back().abs();
        qk.push_back(x);
        x *= p.q;
    }
    const BigRational w_tail = functional_weight(terms, p).abs() / (1 - r);
    const BigRational w_all = w_head + w_tail;

    SelbergResult res;
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::vector<BigRational> pt(static_cast<std::size_t>(n));
    for (;;) {
        BigRational weight = 1;
        for (int i = 0; i < n; ++i) {
            pt[i] = qk[k[i]];
            weight *= w[k[i]];
        }
        const BigRational base = delta2.evaluate(pt) * weight;
        if (!base.is_zero()) {
            res.norm += base;
            res.lhs += schur.evaluate(pt) * base;
        }
        int i = n - 1;
        while (i >= 0 && ++k[i] == terms) k[i--] = 0;
        if (i < 0) break;
    }

    BigRational s_max = schur.evaluate(std::vector<BigRational>(static_cast<std::size_t>(n), BigRational(1)));
    BigRational tail_common = BigRational(n) * w_tail * w_all.pow(n - 1);
    const BigRational e_f = s_max * tail_common, e_1 = tail_common;
    if (res.norm.abs() <= e_1) throw std::domain_error("selberg_check: tail bound swamps the normalization; increase terms");
    res.ratio = res.lhs / res.norm;
    res.closed = moment_closed(lambda, n, p);
    res.rhs = res.closed * res.norm;
    res.bound = (e_f + res.ratio.abs() * e_1) / (res.norm.abs() - e_1);
    return res;
}

namespace {

std::vector<BigRational> check_points(const std::vector<BigRational>& x) {
    if (x.empty()) throw std::invalid_argument("determinant checks need at least one point");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) throw std::invalid_argument("determinant checks need nonzero points");
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw std::invalid_argument("determinant checks need distinct points");
    }
    return x;
}

template <class F>
BigRational det_of(int n, F entry) {
    Matrix<BigRational> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1].push_back(entry(i, j));
    return det(m, BigRational(1));
}

BigRational vandermonde_xj_minus_xi(const std::vector<BigRational>& x) {
    BigRational r = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) r *= x[j] - x[i];
    return r;
}

}  // namespace

bool det_lemma_check(const std::vector<BigRational>& xs, const SpecParams& p) {
    const auto x = check_points(xs);
    const int n = static_cast<int>(x.size());
    const auto& [q, a, b] = p;
    const BigRational ab = a * b;
    auto X = [&](int j) -> const BigRational& { return x[j - 1]; };
    const BigRational vdm = vandermonde_xj_minus_xi(x);

    // det(x_j^{i-1} (a q^i x_j)_{n-i} (b x_j)_{n-i}): no denominators.
    BigRational pair = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pair *= 1 - ab * q.pow(n - 1) * X(i) * X(j);
    const BigRational poly_lhs =
        det_of(n, [&](int i, int j) { return X(j).pow(i - 1) * qpoch(a * q.pow(i) * X(j), q, n - i) * qpoch(b * X(j), q, n - i); });
    if (poly_lhs != pair * vdm) return false;

    // det(x_j^{i-1} / ((a x_j)_i (q^{n-i} b x_j)_i)).
    BigRational den4 = 1;
    for (int j = 1; j <= n; ++j) den4 *= qpoch(a * X(j), q, n) * qpoch(b * X(j), q, n);
    const BigRational lhs4 = det_of(n, [&](int i, int j) {
        return X(j).pow(i - 1) / nonzero(qpoch(a * X(j), q, i) * qpoch(q.pow(n - i) * b * X(j), q, i), "det_lemma_check");
    });
    if (lhs4 != pair * vdm / nonzero(den4, "det_lemma_check")) return false;

    // det(1 / ((a x_j)_i (b/x_j)_i)).
    const int c3 = (n + 1) * n * (n - 1) / 6;
    BigRational rhs = sign(n * (n + 1) / 2) * nonzero(b, "det_lemma_check").pow(-n * n) * q.pow(-c3) * vdm;
    for (int j = 1; j <= n; ++j) rhs *= X(j);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rhs *= b - a * X(i) * X(j);
    BigRational den5 = 1;
    for (int j = 1; j <= n; ++j) den5 *= qpoch(a * X(j), q, n) * qpoch(q.pow(1 - n) * X(j) / b, q, n);
    rhs /= nonzero(den5, "det_lemma_check");
    const BigRational lhs5 = det_of(n, [&](int i, int j) {
        return 1 / nonzero(qpoch(a * X(j), q, i) * qpoch(b / X(j), q, i), "det_lemma_check");
    });
    return lhs5 == rhs;
}

bool det_prop_check(const std::vector<BigRational>& xs, const SpecParams& p) {
    const auto x = check_points(xs);
    const int n = static_cast<int>(x.size());
    const auto& [q, a, b] = p;
    auto X = [&](int j) -> const BigRational& { return x[j - 1]; };
    const BigRational vdm = vandermonde_xj_minus_xi(x);

    BigRational common = vdm;
    for (int i = 1; i <= n; ++i) common *= qpoch(a * b * q.pow(i), q, i - 1) * (X(i) - b);
    const BigRational poly_lhs =
        det_of(n, [&](int i, int j) { return X(j).pow(i) * qpoch(b / X(j), q, i) * qpoch(a * q.pow(i) * X(j), q, n - i); });
    if (poly_lhs != common) return false;

    BigRational den = 1;
    for (int i = 1; i <= n; ++i) den *= qpoch(a * X(i), q, n);
    const BigRational lhs = det_of(n, [&](int i, int j) {
        return X(j).pow(i) * qpoch(b / X(j), q, i) / nonzero(qpoch(a * X(j), q, i), "det_prop_check");
    });
    return lhs == common / nonzero(den, "det_prop_check");
}

}  // namespace lht
