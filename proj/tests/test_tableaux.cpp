#include <doctest.h>

#include <map>

#include "lht/lecture_hall.hpp"
#include "lht/tableau.hpp"

using namespace lht;

namespace {

LaurentPoly mono(long c, int u, int v) { return LaurentPoly::monomial(BigInt(c), u, v); }

bool relation_oracle(Relation r, const BigRational& a, const BigRational& b) {
    switch (r) {
        case Relation::Less: return a < b;
        case Relation::LessEq: return a <= b;
        case Relation::Greater: return a > b;
        case Relation::GreaterEq: return a >= b;
    }
    return false;
}

// All fillings with entry sum <= cap, filtered cell by cell with exact ratios.
QSeries brute_ls(const SkewShape& shape, const OrderType& type, int cap, bool bar) {
    const auto& cells = shape.cells();
    const int m = static_cast<int>(cells.size());
    std::map<std::pair<int, int>, int> where;
    for (int c = 0; c < m; ++c) where[{cells[c].row, cells[c].col}] = c;
    auto ratio = [&](int value, int i, int j) { return BigRational(value, type.n + j - i); };
    QSeries s(cap);
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == m) {
            int u = 0, odd = 0;
            for (int x = 0; x < m; ++x) {
                const auto [i, j] = cells[x];
                if (e[x] < (bar ? 1 : 0)) return;
                if (auto it = where.find({i, j + 1}); it != where.end() &&
                    !relation_oracle(type.row, ratio(e[x], i, j), ratio(e[it->second], i, j + 1)))
                    return;
                if (auto it = where.find({i + 1, j}); it != where.end() &&
                    !relation_oracle(type.col, ratio(e[x], i, j), ratio(e[it->second], i + 1, j)))
                    return;
                const int d = type.n + j - i;
                const int part = bar ? static_cast<int>(ceil_div(e[x], d)) : static_cast<int>(floor_div(e[x], d));
                u += part;
                odd += part % 2 != 0;
            }
            s.add_at(cap - left, mono(1, u, odd));
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[c] = x;
            self(self, c + 1, left - x);
        }
    };
    rec(rec, 0, cap);
    return s;
}

// Semistandard fillings with entries in {0, ..., n-1}, weighted q^{sum}.
QSeries ssyt_oracle(const Partition& lambda, int n, int cap) {
    const SkewShape shape(lambda);
    const auto& cells = shape.cells();
    const int m = static_cast<int>(cells.size());
    std::map<std::pair<int, int>, int> where;
    for (int c = 0; c < m; ++c) where[{cells[c].row, cells[c].col}] = c;
    QSeries s(cap);
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, int c, int sum) -> void {
        if (c == m) {
            if (sum <= cap) s.add_at(sum, LaurentPoly(1));
            return;
        }
        const auto [i, j] = cells[c];
        int lo = 0;
        if (auto it = where.find({i, j - 1}); it != where.end()) lo = std::max(lo, e[it->second]);
        if (auto it = where.find({i - 1, j}); it != where.end()) lo = std::max(lo, e[it->second] + 1);
        for (int x = lo; x < n; ++x) {
            e[c] = x;
            self(self, c + 1, sum + x);
        }
    };
    rec(rec, 0, 0);
    return s;
}

const OrderType kTypes[] = {OrderType::ge_gt(3), OrderType::lt_le(3), OrderType::gt_ge(3), OrderType::le_lt(3)};

OrderType with_n(OrderType t, int n) {
    t.n = n;
    return t;
}

std::vector<SkewShape> small_shapes() {
    return {SkewShape({1}),       SkewShape({2}),         SkewShape({1, 1}),      SkewShape({2, 1}),
            SkewShape({3}),       SkewShape({1, 1, 1}),   SkewShape({2, 2}),      SkewShape({2, 1}, {1}),
            SkewShape({3, 1}),    SkewShape({2, 2}, {1}), SkewShape({3, 2}, {1}), SkewShape({2, 1, 1}),
            SkewShape({3, 3}, {2})};
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("order type names") {
    for (const auto& t : kTypes) CHECK(OrderType::parse(t.name(), 3) == t);
    CHECK(OrderType::ge_gt(2).name() == "ge-gt");
    CHECK(OrderType::gt_ge(2).is_bar());
    CHECK_FALSE(OrderType::lt_le(2).is_bar());
    CHECK(OrderType::ge_gt(2).is_decreasing());
    CHECK_THROWS_AS(OrderType::parse("ge-ge", 3), std::invalid_argument);
    CHECK(cell_denominator(5, 2, 4) == 7);
}

TEST_CASE("example tableau") {
    const Tableau t = example_tableau();
    CHECK(validate(t));
    CHECK(t.entry_sum() == 41);
    CHECK(t.at(1, 4) == 9);
    CHECK(t.at(4, 1) == 1);
    CHECK(weight(t, false) == Weight{41, 3, 3});
    CHECK(weight(t, true) == Weight{41, 13, 11});
    CHECK(natural_weight(t) == weight(t, false));
    CHECK(t.rows() == std::vector<std::vector<int>>{{9, 4, 3}, {5, 6, 4, 3, 1}, {2, 2, 1, 0}, {1, 0, 0}});
    // 5/10 > 4/9 breaks the weak row condition in the first row.
    auto rows = t.rows();
    rows[0][2] = 5;
    CHECK_FALSE(validate(Tableau::from_rows(t.shape(), t.type(), rows)));
    // 0/5 over 0/3 breaks only the strict column condition.
    rows = t.rows();
    rows[2][2] = 0;
    CHECK_FALSE(validate(Tableau::from_rows(t.shape(), t.type(), rows)));
    CHECK(tableau_from_json(to_json(t)) == t);
    CHECK_THROWS_AS(Tableau::from_rows(t.shape(), t.type(), {{1, 2}}), std::invalid_argument);
}

TEST_CASE("plus map on the example tableau") {
    const Tableau p = tableau_plus(example_tableau());
    CHECK(p.type() == OrderType::gt_ge(5));
    CHECK(validate(p));
    CHECK(natural_weight(p) == Weight{56, 18, 12});
    CHECK(tableau_minus(p) == example_tableau());
}

TEST_CASE("series agree with the brute-force filling oracle") {
    for (const auto& shape : small_shapes())
        for (int n : {2, 3, 4})
            for (const auto& base : kTypes) {
                const OrderType type = with_n(base, n);
                const int cap = shape.size() <= 3 ? 10 : 7;
                if (shape.outer().length() > n) continue;
                CHECK_MESSAGE(ls_series(shape, type, cap) == brute_ls(shape, type, cap, type.is_bar()), shape.to_string(),
                              " ", type.name(), " n=", n);
                std::int64_t count = 0;
                for_each_tableau(shape, type, cap, [&](const std::vector<int>&, int) { ++count; });
                CHECK(count == count_tableaux(shape, type, cap));
                const auto all = enumerate_tableaux(shape, type, cap);
                CHECK(static_cast<std::int64_t>(all.size()) == count);
                for (const auto& t : all) CHECK(validate(t));
            }
}

TEST_CASE("one row and one column give the complete and elementary series") {
    const int cap = 14;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            CHECK(ls_series(SkewShape(Partition{k}), OrderType::ge_gt(n), cap) == h_series(n, k, cap));
            if (k <= n) CHECK(ls_series(SkewShape(Partition::column(k)), OrderType::ge_gt(n), cap) == e_series(n, k, cap));
        }
}

TEST_CASE("shapes with more than n rows are rejected") {
    CHECK_THROWS_AS(ls_series(SkewShape(Partition{1, 1, 1}), OrderType::ge_gt(2), 5), std::invalid_argument);
}

TEST_CASE("empty shape") {
    for (const auto& t : kTypes) {
        CHECK(ls_series(SkewShape(Partition{}), t, 6).is_one());
        CHECK(jacobi_trudi(SkewShape(Partition{}), t, 6, JtForm::H).is_one());
        CHECK(jacobi_trudi(SkewShape(Partition{}), t, 6, JtForm::E).is_one());
    }
}

TEST_CASE("Jacobi-Trudi determinants equal the series") {
    for (const auto& shape : small_shapes())
        for (int n : {2, 3, 4})
            for (const auto& base : kTypes) {
                const OrderType type = with_n(base, n);
                if (shape.outer().length() > n) continue;
                const int cap = 12;
                const QSeries series = ls_series(shape, type, cap);
                CHECK_MESSAGE(jacobi_trudi(shape, type, cap, JtForm::H) == series, shape.to_string(), " ", type.name(), " n=", n);
                CHECK_MESSAGE(jacobi_trudi(shape, type, cap, JtForm::E) == series, shape.to_string(), " ", type.name(), " n=", n);
            }
}

TEST_CASE("Jacobi-Trudi on the example shape") {
    const SkewShape shape(Partition{6, 6, 4, 3}, Partition{3, 1});
    const std::pair<OrderType, int> cases[] = {
        {OrderType::ge_gt(5), 18}, {OrderType::lt_le(5), 26}, {OrderType::gt_ge(5), 30}, {OrderType::le_lt(5), 40}};
    for (const auto& [type, cap] : cases) {
        const QSeries series = ls_series(shape, type, cap);
        CHECK_FALSE(series.is_zero());
        CHECK(jacobi_trudi(shape, type, cap, JtForm::H) == series);
        CHECK(jacobi_trudi(shape, type, cap, JtForm::E) == series);
    }
}

TEST_CASE("product formulas equal the series for straight shapes") {
    const Partition shapes[] = {{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 1, 1}, {3, 2, 1}, {4, 2}};
    for (const auto& lambda : shapes)
        for (int n = std::max(1, lambda.length()); n <= 4; ++n)
            for (const auto& base : kTypes) {
                const OrderType type = with_n(base, n);
                const int cap = 14;
                CHECK_MESSAGE(ls_product(lambda, type, cap) == ls_series(SkewShape(lambda), type, cap), lambda.to_string(), " ",
                              type.name(), " n=", n);
            }
}

TEST_CASE("principal Schur specialization") {
    const Partition shapes[] = {{}, {1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {4}};
    for (const auto& lambda : shapes)
        for (int n = 1; n <= 4; ++n) {
            const int cap = 20;
            CHECK_MESSAGE(principal_schur(lambda, n, cap) == ssyt_oracle(lambda, n, cap), lambda.to_string(), " n=", n);
            if (lambda.length() <= n) CHECK(vandermonde_ratio(lambda, n, cap) == principal_schur(lambda, n, cap));
        }
}

TEST_CASE("plus and minus maps biject between the families") {
    const std::pair<SkewShape, int> shapes[] = {{SkewShape(Partition{2, 1}), 3}, {SkewShape({2, 2}, {1}), 3}};
    for (const auto& [shape, n] : shapes)
        for (const auto& [from, to] : {std::pair{OrderType::ge_gt(n), OrderType::gt_ge(n)},
                                       std::pair{OrderType::lt_le(n), OrderType::le_lt(n)}}) {
            const int cap = 8;
            const int m = shape.size();
            const auto source = enumerate_tableaux(shape, from, cap);
            CHECK(static_cast<std::int64_t>(source.size()) == count_tableaux(shape, to, cap + m));
            for (const auto& t : source) {
                const Tableau p = tableau_plus(t);
                CHECK(p.type() == to);
                CHECK(validate(p));
                CHECK(tableau_minus(p) == t);
                const Weight w = weight(t, false), wp = natural_weight(p);
                CHECK(wp.q_exp == w.q_exp + m);
                CHECK(wp.u_exp == w.u_exp + m);
                CHECK(wp.v_exp == m - w.v_exp);
            }
        }
}

TEST_CASE("a one-cell shape depends only on its denominator") {
    // The cell (1,1) with n and the cell (2,2) of (2,2)/(1) with n see the same bound.
    const int cap = 12;
    for (int n = 2; n <= 4; ++n)
        CHECK(ls_series(SkewShape(Partition{1}), OrderType::ge_gt(n), cap) ==
              ls_series(SkewShape(Partition{2, 2}, Partition{2, 1}), OrderType::ge_gt(n), cap));
}

}  // TEST_SUITE
