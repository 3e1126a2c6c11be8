#pragma once

#include <string>
#include <vector>

#include "lht/lecture_hall.hpp"
#include "lht/serialize.hpp"
#include "lht/tableau.hpp"

namespace lht {

enum class PathKind { NW, NE };

/// Height j/a on the lattice, kept as a reduced fraction. For NE paths the
/// vertex a step leaves from sits 1/a² below; that offset is the `below` flag
/// and never enters arithmetic.
struct Height {
    long num = 0;
    long den = 1;
    bool below = false;
    bool infinite = false;

    static Height of(long j, long a, bool below = false);
    static Height infinity() { return {0, 1, false, true}; }
    std::string to_string() const;
};

/// Strict total order on the vertices of one column.
bool height_less(const Height& a, const Height& b);

/// A west step from column `column` to `column - 1` (NW) or a northeast step
/// from `column - 1` into `column` (NE), at height region/column.
struct PathStep {
    int column;
    int region;
    Height height() const { return Height::of(region, column); }
    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Path from (start_column, 0) (NE: from (start_column, -1/(start_column+1)²))
/// to (end_column, ∞). Only the horizontal/diagonal steps are stored, in path
/// order; every other step is north.
struct LatticePath {
    PathKind kind = PathKind::NW;
    int start_column = 0;
    int end_column = 0;
    std::vector<PathStep> steps;

    bool is_legal() const;
    /// Product of q^j u^{⌊j/a⌋} v^{o(⌊j/a⌋)} over the steps.
    Weight weight() const;
    /// Closed vertical interval the path occupies on column c.
    std::pair<Height, Height> occupied(int c) const;
    int min_column() const { return std::min(start_column, end_column); }
    int max_column() const { return std::max(start_column, end_column); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// AL_{n,k} member -> path in NW((n,0),(n-k,∞)); L_{n,k} member -> path in
/// NE((n-k, ...),(n,∞)).
LatticePath path_from_sequence(const BoundedSequence& s);
BoundedSequence sequence_from_path(const LatticePath& p);

/// True iff no two paths share a vertex.
bool vertex_disjoint(const std::vector<LatticePath>& paths);

/// One NW path per row (n paths) or one NE path per column.
std::vector<LatticePath> tableau_to_nw_paths(const Tableau& t);
std::vector<LatticePath> tableau_to_ne_paths(const Tableau& t);
/// Inverses; throw std::invalid_argument if the family intersects.
Tableau nw_paths_to_tableau(const std::vector<LatticePath>& paths, int n);
Tableau ne_paths_to_tableau(const std::vector<LatticePath>& paths, int n);

/// Σ over vertex-disjoint path families (enumerated path by path, without
/// reference to the tableau conditions) of the weight product.
QSeries nw_family_series(const SkewShape& shape, int n, int cap);
QSeries ne_family_series(const SkewShape& shape, int n, int cap);
/// det(W_{λ_i+n-i, μ_j+n-j}) with W_{a,b} = h^{(b+1)}_{a-b}.
QSeries nw_determinant(const SkewShape& shape, int n, int cap);
/// det(E_{n-λ'_i+i-1, n-μ'_j+j-1}) with E_{a,b} = e^{(b)}_{b-a}.
QSeries ne_determinant(const SkewShape& shape, int n, int cap);
/// Both family sums equal their determinants up to cap.
bool lgv_check(const SkewShape& shape, int n, int cap);

Json to_json(const LatticePath& p);
LatticePath path_from_json(const Json& j);
/// Deterministic SVG drawing of the paths; `scale` pixels per unit.
std::string paths_to_svg(const std::vector<LatticePath>& paths, double scale);

}  // namespace lht
