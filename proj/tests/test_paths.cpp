#include <doctest.h>

#include "lht/paths.hpp"

using namespace lht;

namespace {

LatticePath make_path(PathKind kind, int start, int end, std::vector<PathStep> steps) {
    return LatticePath{kind, start, end, std::move(steps)};
}

Weight family_weight(const std::vector<LatticePath>& paths) {
    Weight w;
    for (const auto& p : paths) {
        const Weight x = p.weight();
        w.q_exp += x.q_exp;
        w.u_exp += x.u_exp;
        w.v_exp += x.v_exp;
    }
    return w;
}

const std::vector<LatticePath> kExampleNw = {
    make_path(PathKind::NW, 10, 7, {{10, 3}, {9, 4}, {8, 9}}),
    make_path(PathKind::NW, 9, 4, {{9, 1}, {8, 3}, {7, 4}, {6, 6}, {5, 5}}),
    make_path(PathKind::NW, 6, 2, {{6, 0}, {5, 1}, {4, 2}, {3, 2}}),
    make_path(PathKind::NW, 4, 1, {{4, 0}, {3, 0}, {2, 1}}),
    make_path(PathKind::NW, 0, 0, {}),
};

const std::vector<LatticePath> kExampleNe = {
    make_path(PathKind::NE, 1, 3, {{2, 1}, {3, 2}}),
    make_path(PathKind::NE, 2, 5, {{3, 0}, {4, 2}, {5, 5}}),
    make_path(PathKind::NE, 3, 6, {{4, 0}, {5, 1}, {6, 6}}),
    make_path(PathKind::NE, 5, 8, {{6, 0}, {7, 4}, {8, 9}}),
    make_path(PathKind::NE, 7, 9, {{8, 3}, {9, 4}}),
    make_path(PathKind::NE, 8, 10, {{9, 1}, {10, 3}}),
};

}  // namespace

TEST_SUITE("paths") {

TEST_CASE("heights compare as fractions") {
    CHECK(height_less(Height::of(1, 3), Height::of(1, 2)));
    CHECK_FALSE(height_less(Height::of(2, 4), Height::of(1, 2)));
    CHECK(height_less(Height::of(1, 2, true), Height::of(1, 2)));
    CHECK(height_less(Height::of(100, 1), Height::infinity()));
    CHECK(Height::of(4, 6).num == 2);
    CHECK(Height::of(4, 6).den == 3);
}

TEST_CASE("northwest path of an anti-lecture hall sequence") {
    const BoundedSequence s{Variant::AL, 8, 6, {5, 4, 5, 5, 3, 3}};
    const LatticePath p = path_from_sequence(s);
    CHECK(p == make_path(PathKind::NW, 8, 2, {{8, 3}, {7, 3}, {6, 5}, {5, 5}, {4, 4}, {3, 5}}));
    CHECK(p.is_legal());
    CHECK(sequence_from_path(p) == s);
    CHECK(p.weight() == Weight{s.weight(), s.u_exponent(), s.v_exponent()});
}

TEST_CASE("northeast path of a lecture hall sequence") {
    const BoundedSequence s{Variant::L, 8, 6, {15, 12, 8, 5, 3, 0}};
    const LatticePath p = path_from_sequence(s);
    CHECK(p == make_path(PathKind::NE, 2, 8, {{3, 0}, {4, 3}, {5, 5}, {6, 8}, {7, 12}, {8, 15}}));
    CHECK(p.is_legal());
    CHECK(sequence_from_path(p) == s);
    CHECK(p.weight() == Weight{s.weight(), s.u_exponent(), s.v_exponent()});
}

TEST_CASE("k = 0 gives the all-north path") {
    const LatticePath nw = path_from_sequence({Variant::AL, 4, 0, {}});
    CHECK(nw.steps.empty());
    CHECK(nw.start_column == 4);
    CHECK(nw.end_column == 4);
    const LatticePath ne = path_from_sequence({Variant::L, 4, 0, {}});
    CHECK(ne.steps.empty());
    CHECK(ne.weight() == Weight{});
}

TEST_CASE("sequence and path maps are inverse on whole sets") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            for (const auto& s : enum_set(Variant::AL, n, k, 9)) {
                const LatticePath p = path_from_sequence(s);
                CHECK(p.is_legal());
                CHECK(sequence_from_path(p) == s);
            }
            for (const auto& s : enum_set(Variant::L, n, k, 9)) {
                const LatticePath p = path_from_sequence(s);
                CHECK(p.is_legal());
                CHECK(sequence_from_path(p) == s);
            }
        }
    CHECK_THROWS_AS(path_from_sequence({Variant::Lbar, 2, 1, {1}}), std::invalid_argument);
}

TEST_CASE("illegal paths are detected") {
    // steps must move one column at a time
    CHECK_FALSE(make_path(PathKind::NW, 8, 6, {{8, 3}, {6, 3}}).is_legal());
    // heights must not drop along a northwest path
    CHECK_FALSE(make_path(PathKind::NW, 8, 6, {{8, 7}, {7, 1}}).is_legal());
}

TEST_CASE("example tableau path families") {
    const Tableau t = example_tableau();
    const auto nw = tableau_to_nw_paths(t);
    const auto ne = tableau_to_ne_paths(t);
    CHECK(nw == kExampleNw);
    CHECK(ne == kExampleNe);
    CHECK(vertex_disjoint(nw));
    CHECK(vertex_disjoint(ne));
    CHECK(nw_paths_to_tableau(nw, 5) == t);
    CHECK(ne_paths_to_tableau(ne, 5) == t);
    CHECK(family_weight(nw) == weight(t, false));
    CHECK(family_weight(ne) == weight(t, false));
}

TEST_CASE("intersecting families are rejected") {
    auto nw = kExampleNw;
    nw[1] = nw[0];
    CHECK_FALSE(vertex_disjoint(nw));
    CHECK_THROWS_AS(nw_paths_to_tableau(nw, 5), std::invalid_argument);
    auto ne = kExampleNe;
    ne[2] = ne[1];
    CHECK_FALSE(vertex_disjoint(ne));
    CHECK_THROWS_AS(ne_paths_to_tableau(ne, 5), std::invalid_argument);
}

TEST_CASE("tableau to path families round trip") {
    const std::pair<SkewShape, int> cases[] = {
        {SkewShape(Partition{2, 1}), 3}, {SkewShape({2, 2}, {1}), 3}, {SkewShape(Partition{3, 1}), 2}, {SkewShape({3, 2}, {1}), 3}};
    for (const auto& [shape, n] : cases)
        for (const auto& t : enumerate_tableaux(shape, OrderType::ge_gt(n), 8)) {
            const auto nw = tableau_to_nw_paths(t);
            const auto ne = tableau_to_ne_paths(t);
            CHECK(vertex_disjoint(nw));
            CHECK(vertex_disjoint(ne));
            for (const auto& p : nw) CHECK(p.is_legal());
            for (const auto& p : ne) CHECK(p.is_legal());
            CHECK(nw_paths_to_tableau(nw, n) == t);
            CHECK(ne_paths_to_tableau(ne, n) == t);
            CHECK(family_weight(nw) == weight(t, false));
            CHECK(family_weight(ne) == weight(t, false));
        }
}

TEST_CASE("family sums equal the tableau series and the determinants") {
    const std::pair<SkewShape, int> cases[] = {{SkewShape(Partition{1}), 2},      {SkewShape(Partition{2, 1}), 3},
                                               {SkewShape({2, 2}, {1}), 3},       {SkewShape(Partition{2, 2}), 2},
                                               {SkewShape(Partition{3, 1}), 3},   {SkewShape(Partition{1, 1, 1}), 3}};
    for (const auto& [shape, n] : cases) {
        const int cap = 10;
        const QSeries series = ls_series(shape, OrderType::ge_gt(n), cap);
        CHECK(nw_family_series(shape, n, cap) == series);
        CHECK(ne_family_series(shape, n, cap) == series);
        CHECK(nw_determinant(shape, n, cap) == series);
        CHECK(ne_determinant(shape, n, cap) == series);
        CHECK(lgv_check(shape, n, cap));
    }
}

TEST_CASE("JSON and SVG output") {
    for (const auto& p : kExampleNw) CHECK(path_from_json(to_json(p)) == p);
    for (const auto& p : kExampleNe) CHECK(path_from_json(to_json(p)) == p);
    const std::string svg = paths_to_svg(kExampleNw, 20.0);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg == paths_to_svg(kExampleNw, 20.0));
    CHECK(svg != paths_to_svg(kExampleNw, 30.0));
    CHECK(paths_to_svg(kExampleNe, 20.0) != svg);
}

}  // TEST_SUITE
