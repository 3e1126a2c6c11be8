#include "lht/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lht {

namespace {

bool key_less(const LaurentTerm& a, const LaurentTerm& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; }
bool same_key(const LaurentTerm& a, const LaurentTerm& b) { return a.u == b.u && a.v == b.v; }

std::vector<LaurentTerm> normalize(std::vector<LaurentTerm> terms) {
    std::sort(terms.begin(), terms.end(), key_less);
    std::vector<LaurentTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && same_key(out.back(), t))
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (sgn(out.back().coeff) == 0) out.pop_back();
    }
    return out;
}

// Merge two sorted term lists, b scaled by sign.
std::vector<LaurentTerm> merge(const std::vector<LaurentTerm>& a, const std::vector<LaurentTerm>& b, int sign) {
    std::vector<LaurentTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || key_less(b[j], a[i])) {
            out.push_back(b[j++]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
        } else {
            BigInt c = sign < 0 ? BigInt(a[i].coeff - b[j].coeff) : BigInt(a[i].coeff + b[j].coeff);
            if (sgn(c) != 0) out.push_back({a[i].u, a[i].v, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int c) {
    if (c != 0) terms_.push_back({0, 0, BigInt(c)});
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int u_exp, int v_exp) {
    LaurentPoly p;
    if (sgn(coeff) != 0) p.terms_.push_back({u_exp, v_exp, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<LaurentTerm> terms) {
    LaurentPoly p;
    p.terms_ = normalize(std::move(terms));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].u == 0 && terms_[0].v == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

BigInt LaurentPoly::coefficient(int u_exp, int v_exp) const {
    LaurentTerm key{u_exp, v_exp, BigInt(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
    if (it != terms_.end() && same_key(*it, key)) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

void LaurentPoly::accumulate_product(const LaurentPoly& a, const LaurentPoly& b, std::vector<LaurentTerm>& out) {
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back({x.u + y.u, x.v + y.v, BigInt(x.coeff * y.coeff)});
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.is_monomial() || b.is_monomial()) {
        const auto& m = a.is_monomial() ? a.terms_[0] : b.terms_[0];
        const auto& other = a.is_monomial() ? b : a;
        LaurentPoly r;
        r.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) r.terms_.push_back({t.u + m.u, t.v + m.v, BigInt(t.coeff * m.coeff)});
        return r;
    }
    std::vector<LaurentTerm> buf;
    buf.reserve(a.size() * b.size());
    LaurentPoly::accumulate_product(a, b, buf);
    return LaurentPoly::from_terms(std::move(buf));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentPoly: not a unit: " + to_string());
    return monomial(terms_[0].coeff, -terms_[0].u, -terms_[0].v);
}

LaurentPoly LaurentPoly::pow(int exponent) const {
    if (exponent < 0) return unit_inverse().pow(-exponent);
    LaurentPoly result(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(int du, int dv) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.u += du;
        t.v += dv;
    }
    return r;
}

LaurentPoly LaurentPoly::invert_v() const {
    std::vector<LaurentTerm> t = terms_;
    for (auto& x : t) x.v = -x.v;
    return from_terms(std::move(t));
}

BigRational LaurentPoly::evaluate(const BigRational& u, const BigRational& v) const {
    BigRational acc(0);
    for (const auto& t : terms_) {
        if ((t.u < 0 && u.is_zero()) || (t.v < 0 && v.is_zero()))
            throw std::domain_error("LaurentPoly: negative exponent evaluated at zero");
        BigRational term(t.coeff);
        if (t.u != 0) term *= u.pow(t.u);
        if (t.v != 0) term *= v.pow(t.v);
        acc += term;
    }
    return acc;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& b) const {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return {};
    if (b.is_monomial()) {
        const auto& m = b.terms_[0];
        LaurentPoly r;
        for (const auto& t : terms_) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t()))
                throw std::domain_error("LaurentPoly: inexact division");
            r.terms_.push_back({t.u - m.u, t.v - m.v, BigInt(t.coeff / m.coeff)});
        }
        return r;
    }
    // Shift both operands to polynomials whose exponents have minimum 0 in
    // each variable. The shifted divisor has no monomial factor, so it
    // divides in the Laurent ring iff it divides in Z[u, v], where lex
    // leading-term division terminates.
    auto min_u = [](const std::vector<LaurentTerm>& t) {
        int m = t.front().u;
        for (const auto& x : t) m = std::min(m, x.u);
        return m;
    };
    auto min_v = [](const std::vector<LaurentTerm>& t) {
        int m = t.front().v;
        for (const auto& x : t) m = std::min(m, x.v);
        return m;
    };
    const int au = min_u(terms_), av = min_v(terms_);
    const int bu = min_u(b.terms_), bv = min_v(b.terms_);
    LaurentPoly rem = shifted(-au, -av);
    const LaurentPoly div = b.shifted(-bu, -bv);
    const auto lead = div.terms_.back();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& r = rem.terms_.back();
        if (r.u < lead.u || r.v < lead.v || !mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
            throw std::domain_error("LaurentPoly: inexact division");
        auto t = monomial(BigInt(r.coeff / lead.coeff), r.u - lead.u, r.v - lead.v);
        quot += t;
        rem -= t * div;
    }
    return quot.shifted(au - bu, av - bv);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        BigInt c = t.coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool has_var = t.u != 0 || t.v != 0;
        bool wrote = false;
        if (!has_var || c != 1) {
            os << c.get_str();
            wrote = true;
        }
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        var("u", t.u);
        var("v", t.v);
    }
    return os.str();
}

}  // namespace lht
