#include "lht/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lht {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const BigRational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly: variable index");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[i] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigRational& c) {
    MultiPoly p(static_cast<int>(e.size()));
    for (int x : e)
        if (x < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

BigRational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::pair<Exponents, BigRational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
    return *terms_.rbegin();
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::require_same_nvars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_nvars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_nvars(b);
    MultiPoly r(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly r = constant(nvars_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

BigRational MultiPoly::evaluate(const std::vector<BigRational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("MultiPoly: point dimension");
    BigRational acc(0);
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= x[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw std::invalid_argument("MultiPoly: permutation size");
    MultiPoly r(nvars_);
    Exponents f(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
        r.terms_.emplace(f, c);
    }
    return r;
}

MultiPoly::Division MultiPoly::divide(const MultiPoly& d) const {
    require_same_nvars(d);
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    const auto [lead_e, lead_c] = d.leading_term();
    MultiPoly p = *this, quot(nvars_), rem(nvars_);
    Exponents t(static_cast<std::size_t>(nvars_));
    while (!p.is_zero()) {
        auto [e, c] = p.leading_term();
        bool divisible = true;
        for (int i = 0; i < nvars_; ++i) {
            t[i] = e[i] - lead_e[i];
            if (t[i] < 0) divisible = false;
        }
        if (divisible) {
            MultiPoly m = monomial(t, c / lead_c);
            quot += m;
            p -= m * d;
        } else {
            rem.terms_.emplace(e, c);
            p.terms_.erase(std::prev(p.terms_.end()));
        }
    }
    return {std::move(quot), std::move(rem)};
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& d) const {
    auto [q, r] = divide(d);
    if (!r.is_zero()) throw std::logic_error("MultiPoly: nonzero remainder in exact division");
    return q;
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    auto [q, r] = a.divide(b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i + 1;
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MultiPoly vandermonde(int nvars) {
    MultiPoly r = MultiPoly::constant(nvars, 1);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) r *= MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, j);
    return r;
}

}  // namespace lht
