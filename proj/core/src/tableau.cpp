#include "lht/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lht/determinant.hpp"
#include "lht/lecture_hall.hpp"

namespace lht {

namespace {

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

// a/ad rel b/bd by cross-multiplication (ad, bd > 0).
bool holds(Relation r, std::int64_t a, std::int64_t ad, std::int64_t b, std::int64_t bd) {
    const std::int64_t l = a * bd, rr = b * ad;
    switch (r) {
        case Relation::Less: return l < rr;
        case Relation::LessEq: return l <= rr;
        case Relation::Greater: return l > rr;
        case Relation::GreaterEq: return l >= rr;
    }
    return false;
}

void require_fits(const SkewShape& shape, int n) {
    if (shape.outer().length() > n)
        throw std::invalid_argument("shape " + shape.to_string() + " has more than n = " + std::to_string(n) + " rows");
}

// Index of each cell in the row-major list.
class CellIndex {
public:
    explicit CellIndex(const SkewShape& shape) : shape_(shape) {
        int idx = 0;
        for (int i = 1; i <= shape.outer().length(); ++i) {
            row_start_.push_back(idx - (shape.inner()[i] + 1));
            idx += shape.outer()[i] - shape.inner()[i];
        }
    }
    int operator()(int i, int j) const {
        if (i < 1 || !shape_.contains_cell(i, j)) return -1;
        return row_start_[i - 1] + j;
    }

private:
    const SkewShape& shape_;
    std::vector<int> row_start_;
};

struct Constraint {
    int neighbour;
    bool strict;
};

struct FillPlan {
    std::vector<int> order;                     // cell indices in fill order
    std::vector<std::vector<Constraint>> deps;  // per cell, neighbours placed earlier
    std::vector<int> den;                       // per cell, n + c
    int base = 0;
};

FillPlan make_plan(const SkewShape& shape, const OrderType& type) {
    type.require_supported();
    require_fits(shape, type.n);
    const auto& cells = shape.cells();
    const CellIndex index(shape);
    FillPlan plan;
    plan.base = type.is_bar() ? 1 : 0;
    plan.deps.resize(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [i, j] = cells[c];
        plan.den.push_back(cell_denominator(type.n, i, j));
        // Every constraint is "this ratio exceeds the neighbour's ratio",
        // strictly or weakly.
        const int dj = type.is_decreasing() ? 1 : -1;
        const int di = type.is_decreasing() ? 1 : -1;
        if (int h = index(i, j + dj); h >= 0) plan.deps[c].push_back({h, is_strict(type.row)});
        if (int v = index(i + di, j); v >= 0) plan.deps[c].push_back({v, is_strict(type.col)});
    }
    plan.order.resize(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) plan.order[c] = static_cast<int>(c);
    if (type.is_decreasing()) std::reverse(plan.order.begin(), plan.order.end());
    return plan;
}

std::int64_t lower_bound(const FillPlan& plan, int cell, const std::vector<int>& values) {
    std::int64_t lo = plan.base;
    for (const auto& [nb, strict] : plan.deps[cell]) {
        const std::int64_t num = static_cast<std::int64_t>(values[nb]) * plan.den[cell];
        const std::int64_t d = plan.den[nb];
        lo = std::max(lo, strict ? floor_div(num, d) + 1 : ceil_div(num, d));
    }
    return lo;
}

int stat_part(int entry, int den, bool ceiling) {
    return static_cast<int>(ceiling ? ceil_div(entry, den) : floor_div(entry, den));
}

}  // namespace

OrderType OrderType::parse(std::string_view name, int n) {
    if (n < 1) throw std::invalid_argument("type needs n >= 1");
    if (name == "ge-gt") return ge_gt(n);
    if (name == "lt-le") return lt_le(n);
    if (name == "gt-ge") return gt_ge(n);
    if (name == "le-lt") return le_lt(n);
    throw std::invalid_argument("unknown tableau type '" + std::string(name) + "'");
}

std::string OrderType::name() const {
    auto sym = [](Relation r) {
        switch (r) {
            case Relation::Less: return "lt";
            case Relation::LessEq: return "le";
            case Relation::Greater: return "gt";
            case Relation::GreaterEq: return "ge";
        }
        return "?";
    };
    return std::string(sym(row)) + "-" + sym(col);
}

bool OrderType::is_bar() const {
    return (row == Relation::Greater && col == Relation::GreaterEq) || (row == Relation::LessEq && col == Relation::Less);
}

bool OrderType::is_decreasing() const { return row == Relation::Greater || row == Relation::GreaterEq; }

void OrderType::require_supported() const {
    if (n < 1) throw std::invalid_argument("type needs n >= 1");
    if (*this == ge_gt(n) || *this == lt_le(n) || *this == gt_ge(n) || *this == le_lt(n)) return;
    throw std::invalid_argument("unsupported tableau type " + name());
}

int cell_denominator(int n, int i, int j) {
    const int d = n + content(i, j);
    if (d < 1) throw std::invalid_argument("nonpositive cell denominator");
    return d;
}

Tableau::Tableau(SkewShape shape, OrderType type, std::vector<int> entries)
    : shape_(std::move(shape)), type_(type), entries_(std::move(entries)) {
    type_.require_supported();
    require_fits(shape_, type_.n);
    if (static_cast<int>(entries_.size()) != shape_.size()) throw std::invalid_argument("Tableau: entry count does not match shape");
}

Tableau Tableau::from_rows(SkewShape shape, OrderType type, const std::vector<std::vector<int>>& rows) {
    std::vector<int> entries;
    const int len = shape.outer().length();
    if (static_cast<int>(rows.size()) > len) throw std::invalid_argument("Tableau: too many rows");
    for (int i = 1; i <= len; ++i) {
        const int width = shape.outer()[i] - shape.inner()[i];
        const std::vector<int> empty;
        const auto& row = i <= static_cast<int>(rows.size()) ? rows[i - 1] : empty;
        if (static_cast<int>(row.size()) != width)
            throw std::invalid_argument("Tableau: row " + std::to_string(i) + " needs " + std::to_string(width) + " entries");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Tableau(std::move(shape), type, std::move(entries));
}

int Tableau::at(int i, int j) const {
    const CellIndex index(shape_);
    const int c = index(i, j);
    if (c < 0) throw std::out_of_range("Tableau: cell outside shape");
    return entries_[c];
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.outer().length()));
    const auto& cells = shape_.cells();
    for (std::size_t c = 0; c < cells.size(); ++c) out[cells[c].row - 1].push_back(entries_[c]);
    return out;
}

int Tableau::entry_sum() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
}

bool validate(const Tableau& t) {
    const auto& type = t.type();
    const auto& cells = t.shape().cells();
    const CellIndex index(t.shape());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [i, j] = cells[c];
        const int e = t.entries()[c];
        if (e < (type.is_bar() ? 1 : 0)) return false;
        const int d = cell_denominator(type.n, i, j);
        if (int r = index(i, j + 1); r >= 0 && !holds(type.row, e, d, t.entries()[r], cell_denominator(type.n, i, j + 1)))
            return false;
        if (int b = index(i + 1, j); b >= 0 && !holds(type.col, e, d, t.entries()[b], cell_denominator(type.n, i + 1, j)))
            return false;
    }
    return true;
}

Weight weight(const Tableau& t, bool bar) {
    Weight w;
    const auto& cells = t.shape().cells();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const int e = t.entries()[c];
        const int part = stat_part(e, cell_denominator(t.type().n, cells[c].row, cells[c].col), bar);
        w.q_exp += e;
        w.u_exp += part;
        w.v_exp += part & 1;
    }
    return w;
}

Weight natural_weight(const Tableau& t) { return weight(t, t.type().is_bar()); }

void for_each_tableau(const SkewShape& shape, const OrderType& type, int cap,
                      const std::function<void(const std::vector<int>&, int)>& visit) {
    const FillPlan plan = make_plan(shape, type);
    const std::size_t m = plan.order.size();
    std::vector<int> values(m, 0), scratch(m, 0);
    // Smallest sum of the cells after position p, given the cells placed so far.
    auto min_completion = [&](std::size_t p) {
        scratch = values;
        std::int64_t total = 0;
        for (std::size_t r = p + 1; r < m; ++r) {
            const int cell = plan.order[r];
            const std::int64_t lo = lower_bound(plan, cell, scratch);
            scratch[cell] = static_cast<int>(lo);
            total += lo;
            if (total > cap) break;
        }
        return total;
    };
    if (m == 0) {
        visit(values, 0);
        return;
    }
    std::function<void(std::size_t, int)> rec = [&](std::size_t p, int used) {
        const int cell = plan.order[p];
        for (std::int64_t x = lower_bound(plan, cell, values); used + x <= cap; ++x) {
            values[cell] = static_cast<int>(x);
            if (p + 1 == m) {
                visit(values, used + static_cast<int>(x));
                continue;
            }
            if (used + x + min_completion(p) > cap) break;
            rec(p + 1, used + static_cast<int>(x));
        }
        values[cell] = 0;
    };
    rec(0, 0);
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const OrderType& type, int cap) {
    std::vector<Tableau> out;
    for_each_tableau(shape, type, cap, [&](const std::vector<int>& e, int) { out.emplace_back(shape, type, e); });
    return out;
}

std::int64_t count_tableaux(const SkewShape& shape, const OrderType& type, int cap) {
    std::int64_t count = 0;
    for_each_tableau(shape, type, cap, [&](const std::vector<int>&, int) { ++count; });
    return count;
}

QSeries ls_series(const SkewShape& shape, const OrderType& type, int cap) {
    type.require_supported();
    require_fits(shape, type.n);
    const bool ceiling = type.is_bar();
    const auto& cells = shape.cells();
    std::vector<int> den;
    for (const auto& c : cells) den.push_back(cell_denominator(type.n, c.row, c.col));
    MonomialTally tally(cap, cap + shape.size(), shape.size());
    for_each_tableau(shape, type, cap, [&](const std::vector<int>& e, int sum) {
        int u = 0, v = 0;
        for (std::size_t c = 0; c < e.size(); ++c) {
            const int part = stat_part(e[c], den[c], ceiling);
            u += part;
            v += part & 1;
        }
        tally.add(sum, u, v);
    });
    return tally.to_series();
}

QSeries jacobi_trudi(const SkewShape& shape, const OrderType& type, int cap, JtForm form) {
    type.require_supported();
    require_fits(shape, type.n);
    const int n = type.n;
    const bool bar = type.is_bar();
    const Partition& lam = shape.outer();
    const Partition& mu = shape.inner();
    const Partition lc = lam.conjugate(), mc = mu.conjugate();
    Matrix<QSeries> m;
    if (type.is_decreasing()) {
        if (form == JtForm::H) {
            const int size = lam.length();
            for (int i = 1; i <= size; ++i) {
                auto& row = m.emplace_back();
                for (int j = 1; j <= size; ++j) row.push_back(h_entry(n - j + 1 + mu[j], lam[i] - mu[j] - i + j, cap, bar));
            }
        } else {
            const int size = lc.length();
            for (int i = 1; i <= size; ++i) {
                auto& row = m.emplace_back();
                for (int j = 1; j <= size; ++j) row.push_back(e_entry(n + j - 1 - mc[j], lc[i] - mc[j] - i + j, cap, bar));
            }
        }
    } else {
        if (form == JtForm::E) {
            const int size = lam.length();
            for (int i = 1; i <= size; ++i) {
                auto& row = m.emplace_back();
                for (int j = 1; j <= size; ++j) row.push_back(e_entry(n - i + lam[i], lam[i] - mu[j] - i + j, cap, bar));
            }
        } else {
            const int size = lc.length();
            for (int i = 1; i <= size; ++i) {
                auto& row = m.emplace_back();
                for (int j = 1; j <= size; ++j) row.push_back(h_entry(n + i - lc[i], lc[i] - mc[j] - i + j, cap, bar));
            }
        }
    }
    return det(m, QSeries::one(cap));
}

namespace {

// (q^{λj+n−j} − q^{λi+n−i}) / (q^{i−1} − q^{j−1})
//   = q^{λj+n−j−i+1} (1 − q^{λi−λj+j−i}) / (1 − q^{j−i})
std::pair<QPolynomial, int> vandermonde_ratio_poly(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("vandermonde_ratio: more than n parts");
    QPolynomial num = QPolynomial::constant(1), den = QPolynomial::constant(1);
    int shift = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= QPolynomial::one_minus_q_power(lambda[i] - lambda[j] + j - i);
            den *= QPolynomial::one_minus_q_power(j - i);
            shift += lambda[j] + n - j - i + 1;
        }
    return {num.exact_divide(den), shift};
}

}  // namespace

QSeries vandermonde_ratio(const Partition& lambda, int n, int cap) {
    auto [poly, shift] = vandermonde_ratio_poly(lambda, n);
    return poly.to_series(cap, shift);
}

QSeries principal_schur(const Partition& lambda, int n, int cap) {
    if (lambda.length() > n) return QSeries(cap);
    const Partition lc = lambda.conjugate();
    QPolynomial num = QPolynomial::constant(1), den = QPolynomial::constant(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) {
            num *= QPolynomial::one_minus_q_power(n + content(i, j));
            den *= QPolynomial::one_minus_q_power(lambda[i] - j + lc[j] - i + 1);
        }
    return num.exact_divide(den).to_series(cap, n_stat(lambda));
}

QSeries ls_product(const Partition& lambda, const OrderType& type, int cap) {
    type.require_supported();
    const int n = type.n;
    if (lambda.length() > n) throw std::invalid_argument("ls_product: more than n parts");
    const bool bar = type.is_bar();
    const LaurentPoly num_c = LaurentPoly::monomial(-1, 1, bar ? -1 : 1);
    const LaurentPoly u2 = LaurentPoly::monomial(1, 2, 0);
    auto [vpoly, extra_shift] = vandermonde_ratio_poly(lambda, n);
    QSeries r = QSeries::one(cap);
    if (type.is_decreasing()) {
        for (int i = 1; i <= n; ++i) {
            r *= qpoch_series(num_c, n - i + 1, lambda[i], cap);
            r *= qpoch_inverse_series(u2, 2 * n - i + 1, lambda[i], cap);
        }
    } else {
        extra_shift += n_stat(lambda.conjugate()) - n_stat(lambda);
        for (int i = 1; i <= n; ++i) {
            r *= qpoch_series(num_c, n - i + 1, lambda[i], cap);
            r *= qpoch_inverse_series(u2, n - i + 1 + lambda[i], n - i + lambda[i], cap);
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) r *= qpoch_series(u2, 2 * n + lambda[i] + lambda[j] - i - j + 1, 1, cap);
    }
    if (bar) {
        r *= LaurentPoly::monomial(1, lambda.size(), lambda.size());
        extra_shift += lambda.size();
    }
    return r * vpoly.to_series(cap, extra_shift);
}

Tableau tableau_plus(const Tableau& t) {
    const int n = t.type().n;
    OrderType out;
    if (t.type() == OrderType::ge_gt(n))
        out = OrderType::gt_ge(n);
    else if (t.type() == OrderType::lt_le(n))
        out = OrderType::le_lt(n);
    else
        throw std::invalid_argument("tableau_plus: input must have type ge-gt or lt-le");
    std::vector<int> e = t.entries();
    for (int& x : e) ++x;
    return Tableau(t.shape(), out, std::move(e));
}

Tableau tableau_minus(const Tableau& t) {
    const int n = t.type().n;
    OrderType out;
    if (t.type() == OrderType::gt_ge(n))
        out = OrderType::ge_gt(n);
    else if (t.type() == OrderType::le_lt(n))
        out = OrderType::lt_le(n);
    else
        throw std::invalid_argument("tableau_minus: input must have type gt-ge or le-lt");
    std::vector<int> e = t.entries();
    for (int& x : e) {
        if (x < 1) throw std::invalid_argument("tableau_minus: entries must be positive");
        --x;
    }
    return Tableau(t.shape(), out, std::move(e));
}

Json to_json(const Tableau& t) {
    auto parts = [](const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); };
    return Json{{"shape", parts(t.shape().outer())},
                {"inner", parts(t.shape().inner())},
                {"n", t.type().n},
                {"type", t.type().name()},
                {"entries", t.rows()}};
}

Tableau tableau_from_json(const Json& j) {
    SkewShape shape(Partition(j.at("shape").get<std::vector<int>>()),
                    Partition(j.value("inner", std::vector<int>{})));
    const OrderType type = OrderType::parse(j.at("type").get<std::string>(), j.at("n").get<int>());
    return Tableau::from_rows(std::move(shape), type, j.at("entries").get<std::vector<std::vector<int>>>());
}

Tableau example_tableau() {
    return Tableau::from_rows(SkewShape({6, 6, 4, 3}, {3, 1}), OrderType::ge_gt(5),
                              {{9, 4, 3}, {5, 6, 4, 3, 1}, {2, 2, 1, 0}, {1, 0, 0}});
}

}  // namespace lht
