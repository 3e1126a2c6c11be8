#include <doctest.h>

#include <set>

#include "lht/partition.hpp"

using namespace lht;

namespace {

// Conjugate by counting cells column by column.
Partition conjugate_oracle(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= p[1]; ++j) {
        int c = 0;
        for (int i = 1; i <= p.length(); ++i) c += p[i] >= j;
        cols.push_back(c);
    }
    return Partition(cols);
}

// Partitions of n with parts at most m, counted by recursion.
long count_partitions(int n, int m) {
    if (n == 0) return 1;
    if (m == 0) return 0;
    long total = 0;
    for (int part = std::min(n, m); part >= 1; --part) total += count_partitions(n - part, part);
    return total;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction and parsing") {
    CHECK(Partition({3, 1, 0, 0}).length() == 2);
    CHECK(Partition::parse("6,6,4,3") == Partition{6, 6, 4, 3});
    CHECK(Partition::parse("(2,1)") == Partition{2, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("()").empty());
    CHECK(Partition::parse("0").empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    const Partition p{4, 2, 2, 1};
    CHECK(Partition::parse(p.to_string()) == p);
    CHECK(p.size() == 9);
    CHECK(p[5] == 0);
    CHECK(p[0] == 0);
    CHECK(Partition::column(3) == Partition{1, 1, 1});
}

TEST_CASE("conjugate examples") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{6, 6, 4, 3}.conjugate() == Partition{4, 4, 4, 3, 2, 2});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{5}.conjugate() == Partition::column(5));
}

TEST_CASE("conjugation is an involution matching the column count") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : Partition::all_of_size(n)) {
            CHECK(p.conjugate() == conjugate_oracle(p));
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().size() == n);
        }
}

TEST_CASE("partition counts") {
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        const auto all = Partition::all_of_size(n);
        CHECK(static_cast<long>(all.size()) == expected[n]);
        CHECK(static_cast<long>(all.size()) == count_partitions(n, n));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("n statistic") {
    CHECK(n_stat(Partition{2, 1}) == 1);
    CHECK(n_stat(Partition{3, 3, 2}) == 7);
    CHECK(n_stat(Partition{}) == 0);
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : Partition::all_of_size(n)) {
            int binom_sum = 0;
            for (int part : p.parts()) binom_sum += part * (part - 1) / 2;
            CHECK(n_stat(p.conjugate()) == binom_sum);
        }
}

TEST_CASE("content") {
    CHECK(content(1, 1) == 0);
    CHECK(content(2, 5) == 3);
    CHECK(content(4, 1) == -3);
}

TEST_CASE("containment") {
    CHECK(contains(Partition{6, 6, 4, 3}, Partition{3, 1}));
    CHECK(contains(Partition{2, 1}, Partition{}));
    CHECK_FALSE(contains(Partition{2, 1}, Partition{1, 1, 1}));
    CHECK_FALSE(contains(Partition{3}, Partition{2, 1}));
    std::vector<Partition> all;
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : Partition::all_of_size(n)) all.push_back(p);
    for (const auto& a : all) {
        CHECK(contains(a, a));
        for (const auto& b : all) {
            if (contains(a, b) && contains(b, a)) CHECK(a == b);
            CHECK(contains(a, b) == contains(a.conjugate(), b.conjugate()));
            for (const auto& c : all)
                if (contains(a, b) && contains(b, c)) CHECK(contains(a, c));
        }
    }
}

TEST_CASE("sub_partitions lists exactly the contained partitions") {
    for (const Partition outer : {Partition{}, Partition{2, 1}, Partition{3, 3}, Partition{4, 2, 1}}) {
        const auto subs = sub_partitions(outer);
        std::set<Partition> want;
        for (int n = 0; n <= outer.size(); ++n)
            for (const auto& p : Partition::all_of_size(n))
                if (contains(outer, p)) want.insert(p);
        CHECK(std::set<Partition>(subs.begin(), subs.end()) == want);
        CHECK(subs.size() == want.size());
    }
    // Partitions inside an a×b box number C(a+b, a).
    CHECK(sub_partitions(Partition{3, 3}).size() == 10);
}

TEST_CASE("skew shapes") {
    const SkewShape s(Partition{6, 6, 4, 3}, Partition{3, 1});
    CHECK(s.size() == 15);
    CHECK(s.contains_cell(1, 4));
    CHECK_FALSE(s.contains_cell(1, 3));
    CHECK_FALSE(s.contains_cell(5, 1));
    CHECK(s.cells().front() == Cell{1, 4});
    CHECK(s.cells().back() == Cell{4, 3});
    CHECK(s.conjugate().size() == 15);
    CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

}  // TEST_SUITE
