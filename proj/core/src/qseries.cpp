#include "lht/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace lht {

QSeries::QSeries(int cap) {
    if (cap < 0) throw std::invalid_argument("QSeries: negative cap");
    coeffs_.resize(static_cast<std::size_t>(cap) + 1);
}

QSeries QSeries::constant(const LaurentPoly& c, int cap) {
    QSeries s(cap);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(const LaurentPoly& c, int degree, int cap) {
    if (degree < 0) throw std::invalid_argument("QSeries: negative q-degree");
    QSeries s(cap);
    if (degree <= cap) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

void QSeries::set(int degree, LaurentPoly c) { coeffs_.at(static_cast<std::size_t>(degree)) = std::move(c); }

void QSeries::add_at(int degree, const LaurentPoly& c) {
    if (degree < 0) throw std::invalid_argument("QSeries: negative q-degree");
    if (degree <= cap()) coeffs_[static_cast<std::size_t>(degree)] += c;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool QSeries::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t d = 1; d < coeffs_.size(); ++d)
        if (!coeffs_[d].is_zero()) return false;
    return true;
}

void QSeries::require_same_cap(const QSeries& o, const char* what) const {
    if (cap() != o.cap())
        throw std::invalid_argument(std::string("QSeries ") + what + ": cap mismatch (" + std::to_string(cap()) +
                                    " vs " + std::to_string(o.cap()) + ")");
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    require_same_cap(o, "+");
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    require_same_cap(o, "-");
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.require_same_cap(b, "*");
    const int cap = a.cap();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    int a_low = 0, b_low = 0;
    while (a_low <= cap && a.coeffs_[a_low].is_zero()) ++a_low;
    while (b_low <= cap && b.coeffs_[b_low].is_zero()) ++b_low;
    QSeries r(cap);
    std::vector<LaurentTerm> buf;
    for (int d = a_low + b_low; d <= cap; ++d) {
        buf.clear();
        for (int i = a_low; i <= d - b_low; ++i) {
            const auto& x = a.coeffs_[i];
            const auto& y = b.coeffs_[d - i];
            if (x.is_zero() || y.is_zero()) continue;
            LaurentPoly::accumulate_product(x, y, buf);
        }
        if (!buf.empty()) r.coeffs_[d] = LaurentPoly::from_terms(std::move(buf));
    }
    return r;
}

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries& QSeries::operator*=(const LaurentPoly& c) {
    for (auto& x : coeffs_)
        if (!x.is_zero()) x *= c;
    return *this;
}

QSeries QSeries::shifted(int m) const {
    if (m < 0) throw std::invalid_argument("QSeries: negative shift");
    QSeries r(cap());
    for (int d = 0; d + m <= cap(); ++d) r.coeffs_[d + m] = coeffs_[d];
    return r;
}

QSeries QSeries::inverse() const {
    const LaurentPoly& c0 = coeffs_[0];
    if (!c0.is_unit()) throw std::domain_error("QSeries: constant term is not a unit: " + c0.to_string());
    const LaurentPoly c0_inv = c0.unit_inverse();
    QSeries r(cap());
    r.coeffs_[0] = c0_inv;
    // r_d = -c0^{-1} Σ_{i=1}^{d} a_i r_{d-i}
    std::vector<LaurentTerm> buf;
    for (int d = 1; d <= cap(); ++d) {
        buf.clear();
        for (int i = 1; i <= d; ++i) {
            if (coeffs_[i].is_zero() || r.coeffs_[d - i].is_zero()) continue;
            LaurentPoly::accumulate_product(coeffs_[i], r.coeffs_[d - i], buf);
        }
        if (buf.empty()) continue;
        r.coeffs_[d] = -(LaurentPoly::from_terms(std::move(buf)) * c0_inv);
    }
    return r;
}

QSeries QSeries::invert_v() const {
    QSeries r(cap());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) r.coeffs_[d] = coeffs_[d].invert_v();
    return r;
}

QSeries QSeries::specialize_uv(int u, int v) const {
    QSeries r(cap());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        BigRational val = coeffs_[d].evaluate(BigRational(u), BigRational(v));
        r.coeffs_[d] = LaurentPoly(val.numerator());
    }
    return r;
}

QSeries QSeries::truncated(int new_cap) const {
    if (new_cap > cap()) throw std::invalid_argument("QSeries: cannot raise cap by truncation");
    QSeries r(new_cap);
    for (int d = 0; d <= new_cap; ++d) r.coeffs_[d] = coeffs_[d];
    return r;
}

BigRational QSeries::evaluate(const BigRational& q, const BigRational& u, const BigRational& v) const {
    BigRational acc(0), qp(1);
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) acc += c.evaluate(u, v) * qp;
        qp *= q;
    }
    return acc;
}

std::optional<int> QSeries::first_mismatch(const QSeries& o) const {
    require_same_cap(o, "compare");
    for (int d = 0; d <= cap(); ++d)
        if (coeffs_[d] != o.coeffs_[d]) return d;
    return std::nullopt;
}

bool operator==(const QSeries& a, const QSeries& b) { return a.cap() == b.cap() && a.coeffs_ == b.coeffs_; }

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= cap(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0)
            os << "(" << coeffs_[d] << ")";
        else
            os << "(" << coeffs_[d] << ")*q^" << d;
    }
    if (first) os << "0";
    os << " + O(q^" << cap() + 1 << ")";
    return os.str();
}

QSeries zero_like(const QSeries& s) { return QSeries(s.cap()); }
QSeries one_like(const QSeries& s) { return QSeries::one(s.cap()); }

QSeries qpoch_series(const LaurentPoly& c, int m, int k, int cap) {
    if (k < 0) throw std::invalid_argument("qpoch_series: negative length");
    if (m < 0) throw std::invalid_argument("qpoch_series: negative base exponent");
    QSeries r = QSeries::one(cap);
    for (int i = 0; i < k; ++i) {
        const int e = m + i;
        if (e > cap) break;
        // r *= (1 - c q^e): r_d -= c r_{d-e}, updated from the top down.
        for (int d = cap; d >= e; --d) {
            const auto& prev = r[d - e];
            if (prev.is_zero()) continue;
            r.add_at(d, -(c * prev));
        }
    }
    return r;
}

QSeries qpoch_inverse_series(const LaurentPoly& c, int m, int k, int cap) {
    if (k < 0) throw std::invalid_argument("qpoch_inverse_series: negative length");
    if (m < 0) throw std::invalid_argument("qpoch_inverse_series: negative base exponent");
    QSeries r = QSeries::one(cap);
    for (int i = 0; i < k; ++i) {
        const int e = m + i;
        if (e == 0) {
            LaurentPoly lead = LaurentPoly(1) - c;
            if (!lead.is_unit())
                throw std::domain_error("qpoch_inverse_series: factor (1 - c) is not invertible for c = " +
                                        c.to_string());
            r *= qpoch_series(c, 0, 1, cap).inverse();
            continue;
        }
        if (e > cap) break;
        // r *= 1/(1 - c q^e): r_d += c r_{d-e}, from the bottom up.
        for (int d = e; d <= cap; ++d) {
            const auto& prev = r[d - e];
            if (prev.is_zero()) continue;
            r.add_at(d, c * prev);
        }
    }
    return r;
}

namespace {

QPolynomial gauss_binomial_poly(int n, int k) {
    if (k < 0 || k > n) return QPolynomial();
    // Row-by-row Pascal recurrence [m, j] = [m-1, j-1] + q^j [m-1, j].
    std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(k) + 1);
    row[0] = {BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            const auto& a = row[j - 1];
            const auto& b = row[j];
            std::vector<BigInt> next(std::max(a.size(), b.empty() ? 0 : b.size() + j));
            for (std::size_t d = 0; d < a.size(); ++d) next[d] += a[d];
            for (std::size_t d = 0; d < b.size(); ++d) next[d + j] += b[d];
            row[j] = std::move(next);
        }
    }
    return QPolynomial(row[k]);
}

}  // namespace

QSeries gauss_binomial(int n, int k, int cap) {
    if (n < 0) throw std::invalid_argument("gauss_binomial: negative n");
    return gauss_binomial_poly(n, k).to_series(cap);
}

MonomialTally::MonomialTally(int cap, int max_u, int max_v)
    : cap_(cap), max_u_(max_u), max_v_(max_v),
      counts_(static_cast<std::size_t>(cap + 1) * (max_u + 1) * (max_v + 1), 0) {}

std::size_t MonomialTally::index(int q, int u, int v) const {
    if (q < 0 || q > cap_ || u < 0 || u > max_u_ || v < 0 || v > max_v_)
        throw std::out_of_range("MonomialTally: exponent out of range");
    return (static_cast<std::size_t>(q) * (max_u_ + 1) + u) * (max_v_ + 1) + v;
}

void MonomialTally::add(int q, int u, int v, std::int64_t count) { counts_[index(q, u, v)] += count; }

std::int64_t MonomialTally::total() const {
    std::int64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

QSeries MonomialTally::to_series() const {
    QSeries s(cap_);
    std::vector<LaurentTerm> terms;
    for (int q = 0; q <= cap_; ++q) {
        terms.clear();
        for (int u = 0; u <= max_u_; ++u)
            for (int v = 0; v <= max_v_; ++v)
                if (auto c = counts_[index(q, u, v)]) terms.push_back({u, v, BigInt(static_cast<long>(c))});
        if (!terms.empty()) s.set(q, LaurentPoly::from_terms(terms));
    }
    return s;
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::one_minus_q_power(int m) {
    if (m < 0) throw std::invalid_argument("one_minus_q_power: negative exponent");
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
    c[0] += 1;
    c[m] -= 1;
    return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(int d) const {
    if (d < 0 || d > degree()) return 0;
    return coeffs_[d];
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divide(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("QPolynomial: division by zero");
    const BigInt& lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1) throw std::domain_error("QPolynomial: divisor leading coefficient must be ±1");
    std::vector<BigInt> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<BigInt> quot(rem.size() >= divisor.coeffs_.size() ? rem.size() - divisor.coeffs_.size() + 1 : 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
        if (sgn(rem[d]) == 0) continue;
        BigInt t = rem[d] * lead;  // lead is ±1, so this is rem[d] / lead
        quot[d - dd] = t;
        for (int j = 0; j <= dd; ++j) rem[d - dd + j] -= t * divisor.coeffs_[j];
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::exact_divide(const QPolynomial& divisor) const {
    auto [q, r] = divide(divisor);
    if (!r.is_zero()) throw std::logic_error("QPolynomial: nonzero remainder in exact division");
    return q;
}

QSeries QPolynomial::to_series(int cap, int shift) const {
    QSeries s(cap);
    for (int d = 0; d <= degree(); ++d) {
        if (sgn(coeffs_[d]) == 0) continue;
        const int e = d + shift;
        if (e < 0) throw std::domain_error("QPolynomial: negative q-exponent in series conversion");
        if (e <= cap) s.set(e, LaurentPoly(coeffs_[d]));
    }
    return s;
}

}  // namespace lht
