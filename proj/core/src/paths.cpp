#include "lht/paths.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lht/determinant.hpp"

namespace lht {

Height Height::of(long j, long a, bool below) {
    if (a <= 0) throw std::invalid_argument("Height: nonpositive denominator");
    const long g = std::gcd(j, a);
    return {j / g, a / g, below, false};
}

std::string Height::to_string() const {
    if (infinite) return "inf";
    std::string s = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    return below ? s + "-" : s;
}

bool height_less(const Height& a, const Height& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    const long l = a.num * b.den, r = b.num * a.den;
    if (l != r) return l < r;
    return a.below && !b.below;
}

namespace {

bool height_leq(const Height& a, const Height& b) { return !height_less(b, a); }

const PathStep& step_at_column(const LatticePath& p, int a) {
    const int idx = p.kind == PathKind::NW ? p.start_column - a : a - p.start_column - 1;
    return p.steps.at(static_cast<std::size_t>(idx));
}

bool pair_disjoint(const LatticePath& a, const LatticePath& b) {
    const int lo = std::max(a.min_column(), b.min_column());
    const int hi = std::min(a.max_column(), b.max_column());
    for (int c = lo; c <= hi; ++c) {
        auto [a0, a1] = a.occupied(c);
        auto [b0, b1] = b.occupied(c);
        if (height_leq(a0, b1) && height_leq(b0, a1)) return false;
    }
    return true;
}

std::vector<int> partition_parts(const Partition& p, int len) {
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) v[i - 1] = p[i];
    return v;
}

}  // namespace

bool LatticePath::is_legal() const {
    if (kind == PathKind::NW) {
        if (end_column < 0 || start_column < end_column) return false;
        if (static_cast<int>(steps.size()) != start_column - end_column) return false;
    } else {
        if (start_column < 0 || end_column < start_column) return false;
        if (static_cast<int>(steps.size()) != end_column - start_column) return false;
    }
    for (std::size_t t = 0; t < steps.size(); ++t) {
        const int expected = kind == PathKind::NW ? start_column - static_cast<int>(t) : start_column + 1 + static_cast<int>(t);
        if (steps[t].column != expected || steps[t].region < 0) return false;
        if (t == 0) continue;
        const Height prev = steps[t - 1].height(), cur = steps[t].height();
        if (kind == PathKind::NW ? height_less(cur, prev) : !height_less(prev, cur)) return false;
    }
    return true;
}

Weight LatticePath::weight() const {
    Weight w;
    for (const auto& s : steps) {
        const int part = static_cast<int>(floor_div(s.region, s.column));
        w.q_exp += s.region;
        w.u_exp += part;
        w.v_exp += part & 1;
    }
    return w;
}

std::pair<Height, Height> LatticePath::occupied(int c) const {
    if (c < min_column() || c > max_column()) throw std::out_of_range("LatticePath: column outside path");
    if (kind == PathKind::NW) {
        const Height low = c == start_column ? Height::of(0, 1) : step_at_column(*this, c + 1).height();
        const Height high = c == end_column ? Height::infinity() : step_at_column(*this, c).height();
        return {low, high};
    }
    const Height low = c == start_column ? Height::of(0, 1, true) : step_at_column(*this, c).height();
    Height high = Height::infinity();
    if (c != end_column) {
        const auto& next = step_at_column(*this, c + 1);
        high = Height::of(next.region, next.column, true);
    }
    return {low, high};
}

LatticePath path_from_sequence(const BoundedSequence& s) {
    if (!s.is_valid()) throw std::invalid_argument("path_from_sequence: invalid sequence");
    LatticePath p;
    if (s.variant == Variant::AL) {
        p.kind = PathKind::NW;
        p.start_column = s.n;
        p.end_column = s.n - s.k;
        // path order runs right to left: α_k first
        for (int i = s.k; i >= 1; --i) p.steps.push_back({s.n - s.k + i, s.entries[i - 1]});
    } else if (s.variant == Variant::L) {
        p.kind = PathKind::NE;
        p.start_column = s.n - s.k;
        p.end_column = s.n;
        // path order runs left to right: λ_k first
        for (int i = s.k; i >= 1; --i) p.steps.push_back({s.n - i + 1, s.entries[i - 1]});
    } else {
        throw std::invalid_argument("path_from_sequence: only AL (NW) and L (NE) members map to paths");
    }
    return p;
}

BoundedSequence sequence_from_path(const LatticePath& p) {
    if (!p.is_legal()) throw std::invalid_argument("sequence_from_path: illegal path");
    BoundedSequence s;
    if (p.kind == PathKind::NW) {
        s.variant = Variant::AL;
        s.n = p.start_column;
        s.k = p.start_column - p.end_column;
    } else {
        s.variant = Variant::L;
        s.n = p.end_column;
        s.k = p.end_column - p.start_column;
    }
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) s.entries.push_back(it->region);
    return s;
}

bool vertex_disjoint(const std::vector<LatticePath>& paths) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (!pair_disjoint(paths[i], paths[j])) return false;
    return true;
}

std::vector<LatticePath> tableau_to_nw_paths(const Tableau& t) {
    if (t.type() != OrderType::ge_gt(t.type().n)) throw std::invalid_argument("tableau_to_nw_paths: needs type ge-gt");
    const int n = t.type().n;
    const auto& lam = t.shape().outer();
    const auto& mu = t.shape().inner();
    std::vector<LatticePath> out;
    for (int i = 1; i <= n; ++i) {
        LatticePath p{PathKind::NW, lam[i] + n - i, mu[i] + n - i, {}};
        for (int k = lam[i] - mu[i]; k >= 1; --k) p.steps.push_back({mu[i] + n - i + k, t.at(i, mu[i] + k)});
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<LatticePath> tableau_to_ne_paths(const Tableau& t) {
    if (t.type() != OrderType::ge_gt(t.type().n)) throw std::invalid_argument("tableau_to_ne_paths: needs type ge-gt");
    const int n = t.type().n;
    const Partition lc = t.shape().outer().conjugate(), mc = t.shape().inner().conjugate();
    std::vector<LatticePath> out;
    for (int j = 1; j <= lc.length(); ++j) {
        LatticePath p{PathKind::NE, n - lc[j] + j - 1, n - mc[j] + j - 1, {}};
        // bottom cell first: it sits in the leftmost column of the path
        for (int r = lc[j]; r > mc[j]; --r) p.steps.push_back({n + j - r, t.at(r, j)});
        out.push_back(std::move(p));
    }
    return out;
}

Tableau nw_paths_to_tableau(const std::vector<LatticePath>& paths, int n) {
    if (static_cast<int>(paths.size()) != n) throw std::invalid_argument("nw_paths_to_tableau: need exactly n paths");
    std::vector<int> lam, mu;
    for (int i = 1; i <= n; ++i) {
        const auto& p = paths[i - 1];
        if (p.kind != PathKind::NW || !p.is_legal()) throw std::invalid_argument("nw_paths_to_tableau: illegal path");
        lam.push_back(p.start_column - n + i);
        mu.push_back(p.end_column - n + i);
    }
    if (!vertex_disjoint(paths)) throw std::invalid_argument("nw_paths_to_tableau: paths intersect");
    SkewShape shape{Partition(lam), Partition(mu)};
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
    for (int i = 1; i <= shape.outer().length(); ++i) {
        const auto& steps = paths[i - 1].steps;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) rows[i - 1].push_back(it->region);
    }
    return Tableau::from_rows(std::move(shape), OrderType::ge_gt(n), rows);
}

Tableau ne_paths_to_tableau(const std::vector<LatticePath>& paths, int n) {
    const int cols = static_cast<int>(paths.size());
    std::vector<int> lc, mc;
    for (int j = 1; j <= cols; ++j) {
        const auto& p = paths[j - 1];
        if (p.kind != PathKind::NE || !p.is_legal()) throw std::invalid_argument("ne_paths_to_tableau: illegal path");
        lc.push_back(n - p.start_column + j - 1);
        mc.push_back(n - p.end_column + j - 1);
    }
    if (!vertex_disjoint(paths)) throw std::invalid_argument("ne_paths_to_tableau: paths intersect");
    const Partition lam = Partition(lc).conjugate(), mu = Partition(mc).conjugate();
    if (lam.length() > n) throw std::invalid_argument("ne_paths_to_tableau: shape has more than n rows");
    SkewShape shape{lam, mu};
    std::vector<int> entries(static_cast<std::size_t>(shape.size()));
    const auto& cells = shape.cells();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [r, j] = cells[c];
        const auto& p = paths[j - 1];
        entries[c] = step_at_column(p, n + j - r).region;
    }
    return Tableau(std::move(shape), OrderType::ge_gt(n), std::move(entries));
}

namespace {

// Each path is drawn from its own candidate list; families are kept only if
// vertex-disjoint.
QSeries family_series(const std::vector<std::vector<std::pair<LatticePath, Weight>>>& candidates, int cap, int cells) {
    MonomialTally tally(cap, cap, cells);
    std::vector<const LatticePath*> chosen;
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight acc) {
        if (i == candidates.size()) {
            tally.add(acc.q_exp, acc.u_exp, acc.v_exp);
            return;
        }
        for (const auto& [p, w] : candidates[i]) {
            if (acc.q_exp + w.q_exp > cap) continue;
            bool ok = true;
            for (const auto* prev : chosen)
                if (!pair_disjoint(*prev, p)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&p);
            rec(i + 1, {acc.q_exp + w.q_exp, acc.u_exp + w.u_exp, acc.v_exp + w.v_exp});
            chosen.pop_back();
        }
    };
    rec(0, {});
    return tally.to_series();
}

void require_shape(const SkewShape& shape, int n) {
    if (shape.outer().length() > n) throw std::invalid_argument("shape has more than n rows");
}

}  // namespace

QSeries nw_family_series(const SkewShape& shape, int n, int cap) {
    require_shape(shape, n);
    std::vector<std::vector<std::pair<LatticePath, Weight>>> candidates;
    for (int i = 1; i <= n; ++i) {
        const int a = shape.outer()[i] + n - i, b = shape.inner()[i] + n - i;
        auto& list = candidates.emplace_back();
        for (const auto& s : enum_set(Variant::AL, a, a - b, cap)) {
            LatticePath p = path_from_sequence(s);
            Weight w = p.weight();
            list.emplace_back(std::move(p), w);
        }
    }
    return family_series(candidates, cap, shape.size());
}

QSeries ne_family_series(const SkewShape& shape, int n, int cap) {
    require_shape(shape, n);
    const Partition lc = shape.outer().conjugate(), mc = shape.inner().conjugate();
    std::vector<std::vector<std::pair<LatticePath, Weight>>> candidates;
    for (int j = 1; j <= lc.length(); ++j) {
        const int a = n - lc[j] + j - 1, b = n - mc[j] + j - 1;
        auto& list = candidates.emplace_back();
        for (const auto& s : enum_set(Variant::L, b, b - a, cap)) {
            LatticePath p = path_from_sequence(s);
            Weight w = p.weight();
            list.emplace_back(std::move(p), w);
        }
    }
    return family_series(candidates, cap, shape.size());
}

QSeries nw_determinant(const SkewShape& shape, int n, int cap) {
    require_shape(shape, n);
    const auto lam = partition_parts(shape.outer(), n), mu = partition_parts(shape.inner(), n);
    Matrix<QSeries> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int a = lam[i] + n - (i + 1), b = mu[j] + n - (j + 1);
            m[i].push_back(h_entry(b + 1, a - b, cap, false));
        }
    return det(m, QSeries::one(cap));
}

QSeries ne_determinant(const SkewShape& shape, int n, int cap) {
    require_shape(shape, n);
    const Partition lc = shape.outer().conjugate(), mc = shape.inner().conjugate();
    const int size = lc.length();
    Matrix<QSeries> m(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) {
            const int a = n - lc[i] + i - 1, b = n - mc[j] + j - 1;
            m[i - 1].push_back(e_entry(b, b - a, cap, false));
        }
    return det(m, QSeries::one(cap));
}

bool lgv_check(const SkewShape& shape, int n, int cap) {
    return nw_family_series(shape, n, cap) == nw_determinant(shape, n, cap) &&
           ne_family_series(shape, n, cap) == ne_determinant(shape, n, cap);
}

Json to_json(const LatticePath& p) {
    Json steps = Json::array();
    for (const auto& s : p.steps) steps.push_back(Json{{"column", s.column}, {"region", s.region}, {"height", s.height().to_string()}});
    return Json{{"kind", p.kind == PathKind::NW ? "NW" : "NE"},
                {"start_column", p.start_column},
                {"end_column", p.end_column},
                {"steps", std::move(steps)}};
}

LatticePath path_from_json(const Json& j) {
    LatticePath p;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "NW")
        p.kind = PathKind::NW;
    else if (kind == "NE")
        p.kind = PathKind::NE;
    else
        throw std::invalid_argument("path kind must be NW or NE");
    p.start_column = j.at("start_column").get<int>();
    p.end_column = j.at("end_column").get<int>();
    for (const auto& s : j.at("steps")) p.steps.push_back({s.at("column").get<int>(), s.at("region").get<int>()});
    if (!p.is_legal()) throw std::invalid_argument("path is not legal");
    return p;
}

std::string paths_to_svg(const std::vector<LatticePath>& paths, double scale) {
    double top = 1.0;
    int max_col = 1;
    for (const auto& p : paths) {
        max_col = std::max(max_col, p.max_column());
        for (const auto& s : p.steps) top = std::max(top, static_cast<double>(s.region) / s.column + 1.0);
    }
    const double margin = 10.0;
    auto px = [&](double x) { return margin + x * scale; };
    auto py = [&](double y) { return margin + (top - y) * scale; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * margin + (max_col + 1) * scale) << "\" height=\""
       << fmt(2 * margin + (top + 0.5) * scale) << "\">\n";
    for (const auto& p : paths) {
        std::vector<std::pair<double, double>> pts;
        if (p.kind == PathKind::NW) {
            pts.emplace_back(p.start_column, 0.0);
            for (const auto& s : p.steps) {
                const double h = static_cast<double>(s.region) / s.column;
                pts.emplace_back(s.column, h);
                pts.emplace_back(s.column - 1, h);
            }
            pts.emplace_back(p.end_column, top);
        } else {
            const double c0 = p.start_column + 1.0;
            pts.emplace_back(p.start_column, -1.0 / (c0 * c0));
            for (const auto& s : p.steps) {
                const double h = static_cast<double>(s.region) / s.column;
                pts.emplace_back(s.column - 1, h - 1.0 / (static_cast<double>(s.column) * s.column));
                pts.emplace_back(s.column, h);
            }
            pts.emplace_back(p.end_column, top);
        }
        os << "  <polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << fmt(px(pts[i].first)) << "," << fmt(py(pts[i].second));
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lht
