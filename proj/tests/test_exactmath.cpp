#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lht/determinant.hpp"
#include "lht/multipoly.hpp"
#include "lht/qseries.hpp"
#include "lht/serialize.hpp"

using namespace lht;

namespace {

LaurentPoly mono(long c, int u, int v) { return LaurentPoly::monomial(BigInt(c), u, v); }

QSeries poly_series(std::initializer_list<long> coeffs, int cap) {
    QSeries s(cap);
    int d = 0;
    for (long c : coeffs) {
        if (d <= cap) s.set(d, LaurentPoly(BigInt(c)));
        ++d;
    }
    return s;
}

// Leibniz expansion over all permutations.
template <class R>
R leibniz(const Matrix<R>& m, const R& one) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    R total = one - one;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        R term = one;
        for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
        if (inversions & 1)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigRational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    return BigRational(num(rng), den(rng));
}

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), terms(0, 3);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t) p += mono(c(rng), e(rng), e(rng));
    return p;
}

QSeries random_series(std::mt19937& rng, int cap) {
    QSeries s(cap);
    for (int d = 0; d <= cap; ++d) s.set(d, random_laurent(rng));
    return s;
}

}  // namespace

TEST_SUITE("exactmath") {

TEST_CASE("BigRational stays reduced with positive denominator") {
    BigRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(BigRational(0, 7).denominator() == 1);
    CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
    CHECK(BigRational::parse("7") == BigRational(7));
    CHECK_THROWS_AS(BigRational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(BigRational::parse("1/-2"), std::invalid_argument);
    CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
    CHECK((BigRational(1, 2) + BigRational(1, 3)) == BigRational(5, 6));
    CHECK(BigRational(-1, 3) < BigRational(-1, 4));
}

TEST_CASE("tolerance parsing is exact") {
    CHECK(parse_tolerance("1e-15") == BigRational(BigInt(1), BigInt("1000000000000000")));
    CHECK(parse_tolerance("3e-2") == BigRational(3, 100));
    CHECK(parse_tolerance("1/7") == BigRational(1, 7));
    CHECK(ten_to_minus(3) == BigRational(1, 1000));
}

TEST_CASE("floor and ceiling division handle negative numerators") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("LaurentPoly arithmetic") {
    const LaurentPoly u = lp_u(), v = lp_v();
    CHECK((u + v) * (u - v) == u * u - v * v);
    CHECK(v.pow(-2) == lp_v(-2));
    CHECK(mono(-1, 2, -3).unit_inverse() == mono(-1, -2, 3));
    CHECK(mono(5, 1, 1).invert_v() == mono(5, 1, -1));
    CHECK((u * u - v * v).exact_divide(u + v) == u - v);
    CHECK_THROWS_AS((u * u + v).exact_divide(u + v), std::domain_error);
    CHECK(LaurentPoly::from_terms({{1, 0, 2}, {1, 0, -2}}).is_zero());
    CHECK((u * v + 3).evaluate(BigRational(1, 2), BigRational(4)) == BigRational(5));
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        const auto x = random_series(rng, 6), y = random_series(rng, 6), z = random_series(rng, 6);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("truncation commutes with multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 9), b = random_series(rng, 9);
        CHECK((a * b).truncated(5) == a.truncated(5) * b.truncated(5));
    }
}

TEST_CASE("qpoch_series examples") {
    CHECK(qpoch_series(LaurentPoly(1), 1, 2, 4) == poly_series({1, -1, -1, 1}, 4));
    CHECK(qpoch_series(mono(-1, 1, 1), 5, 0, 6).is_one());
    QSeries want(3);
    want.set(0, 1);
    want.set(2, mono(1, 1, 1));
    CHECK(qpoch_series(mono(-1, 1, 1), 2, 1, 3) == want);
}

TEST_CASE("qpoch_inverse_series examples") {
    QSeries want(9);
    want.set(0, 1);
    want.set(4, mono(1, 2, 0));
    want.set(8, mono(1, 4, 0));
    CHECK(qpoch_inverse_series(mono(1, 2, 0), 4, 1, 9) == want);
    CHECK(qpoch_inverse_series(mono(3, 0, 0), 1, 0, 5).is_one());
    CHECK((qpoch_series(mono(-1, 1, 1), 2, 3, 12) * qpoch_inverse_series(mono(-1, 1, 1), 2, 3, 12)).is_one());
    CHECK_THROWS_AS(qpoch_inverse_series(mono(3, 0, 0), 0, 1, 5), std::domain_error);
}

TEST_CASE("qpoch against a factor-by-factor oracle on 100 random draws") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-2, 2), e(-2, 2), m(1, 4), k(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int c0 = coef(rng);
        if (c0 == 0) c0 = 1;
        const LaurentPoly c = mono(c0, e(rng), e(rng));
        const int mm = m(rng), kk = k(rng), cap = 12;
        QSeries oracle = QSeries::one(cap);
        for (int i = 0; i < kk; ++i) {
            QSeries factor = QSeries::one(cap);
            if (mm + i <= cap) factor.add_at(mm + i, -c);
            oracle = oracle * factor;
        }
        const QSeries p = qpoch_series(c, mm, kk, cap);
        CHECK(p == oracle);
        if (c.is_unit()) CHECK((p * qpoch_inverse_series(c, mm, kk, cap)).is_one());
    }
}

TEST_CASE("Gaussian binomials") {
    CHECK(gauss_binomial(4, 2, 10) == poly_series({1, 1, 2, 1, 1}, 10));
    CHECK(gauss_binomial(6, 0, 5).is_one());
    CHECK(gauss_binomial(3, 5, 5).is_zero());
    CHECK(gauss_binomial(3, -1, 5).is_zero());
    // Oracle: words with k ones and n-k zeros counted by inversions.
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            const int cap = 20;
            std::vector<long> count(cap + 1, 0);
            for (unsigned w = 0; w < (1u << n); ++w) {
                if (__builtin_popcount(w) != k) continue;
                int inv = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) inv += ((w >> i) & 1) && !((w >> j) & 1);
                ++count[inv];
            }
            QSeries want(cap);
            for (int d = 0; d <= cap; ++d) want.set(d, LaurentPoly(BigInt(count[d])));
            CHECK(gauss_binomial(n, k, cap) == want);
        }
}

TEST_CASE("QSeries rejects mixed caps") {
    CHECK_THROWS_AS(QSeries::one(3) + QSeries::one(4), std::invalid_argument);
    CHECK_THROWS_AS((void)QSeries::one(3).first_mismatch(QSeries::one(4)), std::invalid_argument);
}

TEST_CASE("QSeries inverse and evaluation") {
    const QSeries one_minus_q = poly_series({1, -1}, 8);
    QSeries geometric(8);
    for (int d = 0; d <= 8; ++d) geometric.set(d, 1);
    CHECK(one_minus_q.inverse() == geometric);
    CHECK(geometric.evaluate(BigRational(1, 2), 1, 1) == BigRational(511, 256));
    CHECK(geometric.shifted(3)[3] == LaurentPoly(1));
    CHECK(geometric.shifted(3)[2].is_zero());
}

TEST_CASE("QPolynomial exact division") {
    QPolynomial num = QPolynomial::one_minus_q_power(6);
    const QPolynomial den = QPolynomial::one_minus_q_power(2);
    const QPolynomial quo = num.exact_divide(den);
    CHECK(quo == QPolynomial({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(QPolynomial::one_minus_q_power(5).exact_divide(den), std::logic_error);
}

TEST_CASE("MultiPoly arithmetic and division") {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const MultiPoly sq = (x + y).pow(2);
    CHECK(sq.coefficient({1, 1}) == BigRational(2));
    CHECK(sq.total_degree() == 2);
    CHECK((x * x - y * y).exact_divide(x - y) == x + y);
    const auto div = (x * x + y).divide(x - y);
    CHECK(div.quotient * (x - y) + div.remainder == x * x + y);
    CHECK_THROWS_AS((x * x + y).exact_divide(x - y), std::logic_error);
    CHECK(sq.evaluate({BigRational(1, 2), BigRational(1, 3)}) == BigRational(25, 36));
    CHECK(sq.permuted({1, 0}) == sq);
}

TEST_CASE("Vandermonde product") {
    const MultiPoly a = MultiPoly::variable(3, 0), b = MultiPoly::variable(3, 1), c = MultiPoly::variable(3, 2);
    CHECK(vandermonde(3) == (a - b) * (a - c) * (b - c));
    CHECK(vandermonde(1) == MultiPoly::constant(1, 1));
}

TEST_CASE("determinant examples") {
    CHECK(det(Matrix<BigRational>{{BigRational(1, 2), BigRational(1, 3)}, {BigRational(1, 4), BigRational(1, 5)}}) ==
          BigRational(1, 60));
    CHECK(det(Matrix<BigRational>{{BigRational(5)}}) == BigRational(5));
    Matrix<BigRational> id(3, std::vector<BigRational>(3));
    for (int i = 0; i < 3; ++i) id[i][i] = 1;
    CHECK(det(id) == BigRational(1));
    CHECK(det(Matrix<BigRational>{}, BigRational(1)) == BigRational(1));
    CHECK_THROWS_AS(det(Matrix<BigRational>{{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(det(Matrix<QSeries>{{QSeries::one(3), QSeries::one(3)}, {QSeries::one(3), QSeries::one(4)}}),
                    std::invalid_argument);
}

TEST_CASE("determinants agree with the permutation expansion") {
    std::mt19937 rng(99);
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Matrix<BigRational> m(n);
            for (auto& row : m)
                for (int j = 0; j < n; ++j) row.push_back(random_rational(rng));
            const BigRational want = leibniz(m, BigRational(1));
            CHECK(det(m, BigRational(1)) == want);
            CHECK(det_elimination(m, BigRational(1)) == want);
            CHECK(det_cofactor(m, BigRational(1)) == want);
        }
    for (int n = 1; n <= 4; ++n) {
        Matrix<LaurentPoly> m(n);
        for (auto& row : m)
            for (int j = 0; j < n; ++j) row.push_back(random_laurent(rng));
        CHECK(det(m, LaurentPoly(1)) == leibniz(m, LaurentPoly(1)));
        Matrix<QSeries> s(n);
        for (auto& row : s)
            for (int j = 0; j < n; ++j) row.push_back(random_series(rng, 5));
        CHECK(det(s, QSeries::one(5)) == leibniz(s, QSeries::one(5)));
        Matrix<MultiPoly> p(n);
        for (auto& row : p)
            for (int j = 0; j < n; ++j)
                row.push_back(MultiPoly::variable(2, j % 2) * random_rational(rng) + MultiPoly::constant(2, random_rational(rng)));
        CHECK(det(p, MultiPoly::constant(2, 1)) == leibniz(p, MultiPoly::constant(2, 1)));
    }
}

TEST_CASE("elimination and cofactor agree on larger series matrices") {
    std::mt19937 rng(5);
    Matrix<QSeries> m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            QSeries s = random_series(rng, 4);
            if (i == j) s.set(0, 1);
            m[i].push_back(s);
        }
    CHECK(det_elimination(m, QSeries::one(4)) == det_cofactor(m, QSeries::one(4)));
}

TEST_CASE("JSON round trips") {
    const BigRational r(-22, 7);
    CHECK(to_json(r) == Json("-22/7"));
    CHECK(bigrational_from_json(to_json(r)) == r);
    const LaurentPoly p = mono(3, -1, 2) + mono(-5, 0, 0);
    CHECK(to_json(p).dump() == R"([[-1,2,"3"],[0,0,"-5"]])");
    CHECK(laurent_from_json(to_json(p)) == p);
    std::mt19937 rng(3);
    const QSeries s = random_series(rng, 6);
    const Json j = to_json(s);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(qseries_from_json(j) == s);
}

}  // TEST_SUITE
