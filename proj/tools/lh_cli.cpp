#include "lh_cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "lht/lecture_hall.hpp"
#include "lht/paths.hpp"
#include "lht/qjacobi.hpp"
#include "lht/serialize.hpp"
#include "lht/tableau.hpp"

namespace lhcli {

using namespace lht;

namespace {

// ---- flag parsing ---------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) throw std::invalid_argument("bad integer list '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

SkewShape parse_shape(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

// --inner 3,1 is the same as a "/3,1" suffix on --shape.
void merge_inner(std::string& shape, const std::string& inner) {
    if (inner.empty()) return;
    if (shape.find('/') != std::string::npos) throw std::invalid_argument("give the inner shape either in --shape or in --inner");
    shape += "/" + inner;
}

Partition parse_straight(const std::string& text) {
    const SkewShape s = parse_shape(text);
    if (!s.inner().empty()) throw std::invalid_argument("this check needs a straight shape, got '" + text + "'");
    return s.outer();
}

std::vector<OrderType> parse_types(const std::string& text, int n) {
    if (text == "all") return {OrderType::ge_gt(n), OrderType::lt_le(n), OrderType::gt_ge(n), OrderType::le_lt(n)};
    return {OrderType::parse(text, n)};
}

std::vector<Variant> parse_variants(const std::string& text) {
    if (text == "all") return {Variant::L, Variant::Lbar, Variant::AL, Variant::ALbar};
    return {parse_variant(text)};
}

struct ParamFlags {
    std::string q = "1/3";
    std::string u = "1/5";
    std::string v = "2/7";
    std::string a;
    std::string b;

    SpecParams resolve() const {
        if (a.empty() != b.empty()) throw std::invalid_argument("--a and --b must be given together");
        const BigRational qq = BigRational::parse(q);
        if (!a.empty()) return SpecParams::from_ab(qq, BigRational::parse(a), BigRational::parse(b));
        return SpecParams::from_uv(qq, BigRational::parse(u), BigRational::parse(v));
    }
};

void add_param_flags(CLI::App* app, ParamFlags& p) {
    app->add_option("--q", p.q, "q as p/r, 0 < q < 1")->capture_default_str();
    app->add_option("--u", p.u, "u (a = -uv, b = -u/v)")->capture_default_str();
    app->add_option("--v", p.v, "v")->capture_default_str();
    app->add_option("--a", p.a, "a (overrides u, v)");
    app->add_option("--b", p.b, "b (overrides u, v)");
}

// ---- output ---------------------------------------------------------------

enum class Format { Json, Tsv };

void write_series_tsv(std::ostream& out, const QSeries& s) {
    out << "degree\tu\tv\tcoeff\n";
    for (int d = 0; d <= s.cap(); ++d)
        for (const auto& t : s[d].terms()) out << d << '\t' << t.u << '\t' << t.v << '\t' << lht::to_string(t.coeff) << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Deterministic rational draws: numerators and denominators from small ranges.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    BigRational nonzero(int range = 9, int max_den = 12) {
        std::uniform_int_distribution<int> num(1, range), den(1, max_den), sgn(0, 1);
        const int p = num(rng_);
        return BigRational(sgn(rng_) ? -p : p, den(rng_));
    }
    BigRational unit_interval() {
        std::uniform_int_distribution<int> den(2, 12);
        const int d = den(rng_);
        std::uniform_int_distribution<int> num(1, d - 1);
        return BigRational(num(rng_), d);
    }

private:
    std::mt19937_64 rng_;
};

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    std::string shape;
    int n = 3;
    int k = -1;
    int cap = 12;
    int size = 9;
    std::string type = "all";
    std::string variant = "all";
    ParamFlags params;
    int terms = 50;
    std::string tol = "1e-15";
    int draws = 20;
    std::uint64_t seed = 1;
};

struct Line {
    bool pass;
    std::string label;
    std::string detail;
};

using Lines = std::vector<Line>;

Line compare(std::string label, const QSeries& got, const QSeries& want) {
    const auto m = got.first_mismatch(want);
    if (!m) return {true, std::move(label), ""};
    const int d = *m;
    return {false, std::move(label),
            "first mismatch at q^" + std::to_string(d) + ": " + got[d].to_string() + " vs " + want[d].to_string()};
}

Line boolean(std::string label, bool ok, std::string detail = "") {
    return {ok, std::move(label), ok ? "" : std::move(detail)};
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }
std::string sn(const std::string& shape, int n) { return shape + " n=" + std::to_string(n); }

void require_shape(const VerifyOptions& o) {
    if (o.shape.empty()) throw std::invalid_argument("this check needs --shape");
}

Lines v_lecture_hall(const VerifyOptions& o) {
    Lines out;
    for (int n = 1; n <= o.n; ++n) {
        QSeries want = QSeries::one(o.cap);
        for (int i = 0; i < n; ++i) want *= qpoch_inverse_series(LaurentPoly(1), 2 * i + 1, 1, o.cap);
        out.push_back(compare("n=" + std::to_string(n), lecture_hall_partition_series(n, o.cap), want));
    }
    return out;
}

Lines v_anti_lecture_hall(const VerifyOptions& o) {
    Lines out;
    for (int n = 1; n <= o.n; ++n) {
        const QSeries want = qpoch_series(LaurentPoly(-1), 1, n, o.cap) * qpoch_inverse_series(LaurentPoly(1), 2, n, o.cap);
        out.push_back(compare("n=" + std::to_string(n), genfun_enum(Variant::AL, n, n, o.cap).specialize_uv(1, 1), want));
    }
    return out;
}

Lines v_closed(const VerifyOptions& o) {
    Lines out;
    for (Variant v : parse_variants(o.variant))
        for (int n = 1; n <= o.n; ++n)
            for (int k = 0; k <= n; ++k) {
                if (o.k >= 0 && k != o.k) continue;
                out.push_back(compare(std::string(to_string(v)) + " " + nk(n, k), genfun_enum(v, n, k, o.cap),
                                      genfun_closed(v, n, k, o.cap)));
            }
    return out;
}

Lines v_example_tableau(const VerifyOptions&) {
    const Tableau t = example_tableau();
    const Weight lo = weight(t, false), hi = weight(t, true);
    return {
        boolean("valid (5,>=,>)", validate(t)),
        boolean("entry sum 41", t.entry_sum() == 41, "got " + std::to_string(t.entry_sum())),
        boolean("floor weight u^3 v^3", lo.u_exp == 3 && lo.v_exp == 3,
                "got u^" + std::to_string(lo.u_exp) + " v^" + std::to_string(lo.v_exp)),
        boolean("ceiling weight u^13 v^11", hi.u_exp == 13 && hi.v_exp == 11,
                "got u^" + std::to_string(hi.u_exp) + " v^" + std::to_string(hi.v_exp)),
    };
}

Lines v_jt(const VerifyOptions& o) {
    require_shape(o);
    const SkewShape shape = parse_shape(o.shape);
    Lines out;
    for (const auto& t : parse_types(o.type, o.n)) {
        const QSeries direct = ls_series(shape, t, o.cap);
        const std::string base = t.name() + " " + sn(shape.to_string(), o.n);
        out.push_back(compare(base + " H-form", jacobi_trudi(shape, t, o.cap, JtForm::H), direct));
        out.push_back(compare(base + " E-form", jacobi_trudi(shape, t, o.cap, JtForm::E), direct));
    }
    return out;
}

Lines v_product(const VerifyOptions& o) {
    require_shape(o);
    const Partition lambda = parse_straight(o.shape);
    Lines out;
    for (const auto& t : parse_types(o.type, o.n))
        out.push_back(compare(t.name() + " " + sn(lambda.to_string(), o.n), ls_product(lambda, t, o.cap),
                              ls_series(SkewShape(lambda), t, o.cap)));
    return out;
}

Lines v_plus_minus(const VerifyOptions& o) {
    require_shape(o);
    const SkewShape shape = parse_shape(o.shape);
    Lines out;
    for (auto [from, to] : {std::pair{OrderType::ge_gt(o.n), OrderType::gt_ge(o.n)},
                            std::pair{OrderType::lt_le(o.n), OrderType::le_lt(o.n)}}) {
        std::set<std::vector<int>> image;
        bool ok = true;
        for (const auto& t : enumerate_tableaux(shape, from, o.cap)) {
            const Tableau p = tableau_plus(t);
            ok = ok && validate(p) && tableau_minus(p) == t;
            image.insert(p.entries());
        }
        std::set<std::vector<int>> target;
        for (const auto& t : enumerate_tableaux(shape, to, o.cap + shape.size())) target.insert(t.entries());
        out.push_back(boolean(from.name() + " -> " + to.name() + " " + sn(shape.to_string(), o.n), ok && image == target,
                              "image has " + std::to_string(image.size()) + " tableaux, target " +
                                  std::to_string(target.size())));
    }
    return out;
}

Lines v_specialization(const VerifyOptions& o) {
    require_shape(o);
    const Partition lambda = parse_straight(o.shape);
    return {compare(sn(lambda.to_string(), o.n),
                    ls_series(SkewShape(lambda), OrderType::ge_gt(o.n), o.cap).specialize_uv(0, 0),
                    principal_schur(lambda, o.n, o.cap))};
}

Lines v_orthogonality(const VerifyOptions& o) {
    Lines out;
    for (int m = 0; m <= o.n; ++m)
        for (int n = 0; n <= o.n; ++n)
            out.push_back(boolean("m=" + std::to_string(m) + " n=" + std::to_string(n), orthogonality_check(m, n, o.cap)));
    return out;
}

Lines v_lgv(const VerifyOptions& o) {
    require_shape(o);
    const SkewShape shape = parse_shape(o.shape);
    const std::string base = sn(shape.to_string(), o.n);
    return {compare(base + " NW", nw_family_series(shape, o.n, o.cap), nw_determinant(shape, o.n, o.cap)),
            compare(base + " NE", ne_family_series(shape, o.n, o.cap), ne_determinant(shape, o.n, o.cap)),
            compare(base + " NW = LS", nw_family_series(shape, o.n, o.cap), ls_series(shape, OrderType::ge_gt(o.n), o.cap))};
}

Lines v_bijection(const VerifyOptions& o) {
    Lines out;
    if (o.shape.empty()) {
        const BoundedSequence alhc{Variant::AL, 8, 6, {5, 4, 5, 5, 3, 3}};
        const LatticePath nw = path_from_sequence(alhc);
        const std::vector<PathStep> nw_steps{{8, 3}, {7, 3}, {6, 5}, {5, 5}, {4, 4}, {3, 5}};
        out.push_back(boolean("NW path of (5,4,5,5,3,3)", nw.steps == nw_steps && sequence_from_path(nw) == alhc &&
                                                               path_from_json(to_json(nw)) == nw));
        const BoundedSequence lhp{Variant::L, 8, 6, {15, 12, 8, 5, 3, 0}};
        const LatticePath ne = path_from_sequence(lhp);
        const std::vector<PathStep> ne_steps{{3, 0}, {4, 3}, {5, 5}, {6, 8}, {7, 12}, {8, 15}};
        out.push_back(boolean("NE path of (15,12,8,5,3,0)", ne.steps == ne_steps && sequence_from_path(ne) == lhp &&
                                                                 path_from_json(to_json(ne)) == ne));
        const Tableau ex = example_tableau();
        out.push_back(boolean("example tableau via NW paths", nw_paths_to_tableau(tableau_to_nw_paths(ex), 5) == ex));
        out.push_back(boolean("example tableau via NE paths", ne_paths_to_tableau(tableau_to_ne_paths(ex), 5) == ex));
        return out;
    }
    const SkewShape shape = parse_shape(o.shape);
    std::int64_t total = 0, bad_nw = 0, bad_ne = 0;
    for (const auto& t : enumerate_tableaux(shape, OrderType::ge_gt(o.n), o.cap)) {
        ++total;
        const auto nw = tableau_to_nw_paths(t);
        const auto ne = tableau_to_ne_paths(t);
        if (!vertex_disjoint(nw) || nw_paths_to_tableau(nw, o.n) != t) ++bad_nw;
        if (!vertex_disjoint(ne) || ne_paths_to_tableau(ne, o.n) != t) ++bad_ne;
    }
    const std::string base = sn(shape.to_string(), o.n) + " (" + std::to_string(total) + " tableaux)";
    out.push_back(boolean(base + " NW round trip", bad_nw == 0, std::to_string(bad_nw) + " failures"));
    out.push_back(boolean(base + " NE round trip", bad_ne == 0, std::to_string(bad_ne) + " failures"));
    return out;
}

Lines v_recurrence(const VerifyOptions& o) {
    const SpecParams p = o.params.resolve();
    Lines out;
    for (int n = 0; n <= o.n; ++n)
        out.push_back(boolean("n=" + std::to_string(n),
                              little_q_jacobi_recurrence(n, p) == little_q_jacobi_hypergeometric(n, p)));
    return out;
}

// Redraws until every closed-form denominator is nonzero.
template <class F>
bool with_draw(Draws& d, F body) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const SpecParams p = SpecParams::from_ab(d.unit_interval(), d.nonzero(), d.nonzero());
        try {
            return body(p);
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("no usable parameter draw in 100 attempts");
}

Lines v_moments(const VerifyOptions& o) {
    Draws d(o.seed);
    Lines out;
    for (int i = 0; i < o.draws; ++i) {
        std::string label;
        const bool ok = with_draw(d, [&](const SpecParams& p) {
            label = "draw " + std::to_string(i + 1) + " " + p.to_string();
            for (int r = 0; r < o.size; ++r)
                for (int c = 0; c < o.size; ++c) {
                    BigRational s = 0, t = 0;
                    for (int j = 0; j < o.size; ++j) {
                        s += mu_mixed(r, j, p) * nu_mixed(j, c, p);
                        t += nu_mixed(r, j, p) * mu_mixed(j, c, p);
                    }
                    const BigRational delta = r == c ? 1 : 0;
                    if (s != delta || t != delta) return false;
                }
            return true;
        });
        out.push_back(boolean(label, ok));
    }
    return out;
}

Lines v_alhc(const VerifyOptions& o) {
    Lines out;
    for (int n = 0; n <= o.n; ++n)
        for (int k = 0; k <= n; ++k) {
            out.push_back(compare("mu " + nk(n, k), mu_mixed_series(n, k, o.cap), genfun_enum(Variant::AL, n, n - k, o.cap)));
            QSeries l = genfun_enum(Variant::L, n, n - k, o.cap);
            if ((n - k) & 1) l = -l;
            out.push_back(compare("nu " + nk(n, k), nu_mixed_series(n, k, o.cap), l));
        }
    return out;
}

Lines v_functional(const VerifyOptions& o) {
    const SpecParams p = o.params.resolve();
    const BigRational tol = parse_tolerance(o.tol);
    Lines out;
    const BoundedValue one = functional_univariate(UniPoly::x_power(0), p, o.terms);
    for (int n = 0; n <= o.n; ++n) {
        const BoundedValue m = functional_univariate(UniPoly::x_power(n), p, o.terms);
        const BigRational ratio = m.value / one.value;
        const BigRational bound = (m.bound + ratio.abs() * one.bound) / (one.value.abs() - one.bound);
        const BigRational err = (ratio - mu_mixed(n, 0, p)).abs();
        out.push_back(boolean("L(x^" + std::to_string(n) + ")/L(1)", err <= bound && bound <= tol,
                              "error " + std::to_string(err.to_double()) + ", bound " + std::to_string(bound.to_double())));
    }
    for (int m = 0; m <= o.n; ++m)
        for (int n = m + 1; n <= o.n; ++n) {
            const BoundedValue v = functional_univariate(little_q_jacobi(m, p) * little_q_jacobi(n, p), p, o.terms);
            out.push_back(boolean("L(p_" + std::to_string(m) + " p_" + std::to_string(n) + ") = 0",
                                  v.value.abs() <= v.bound && v.bound <= tol,
                                  "value " + std::to_string(v.value.to_double()) + ", bound " + std::to_string(v.bound.to_double())));
        }
    return out;
}

Lines v_expansion(const VerifyOptions& o) {
    require_shape(o);
    const Partition lambda = parse_straight(o.shape);
    const SpecParams p = o.params.resolve();
    Lines out;
    MultiPoly s_sum(o.n), p_sum(o.n);
    for (const auto& mu : sub_partitions(lambda)) {
        s_sum += multivariate_p(mu, o.n, p) * mixed_moment_M(lambda, mu, o.n, p);
        p_sum += schur_poly(mu, o.n) * dual_N(lambda, mu, o.n, p);
    }
    out.push_back(boolean("s_" + lambda.to_string() + " = sum M p_mu", s_sum == schur_poly(lambda, o.n)));
    out.push_back(boolean("p_" + lambda.to_string() + " = sum N s_mu", p_sum == multivariate_p(lambda, o.n, p)));
    for (const auto& mu : sub_partitions(lambda)) {
        const SkewShape shape(lambda, mu);
        out.push_back(compare("M " + shape.to_string(), mixed_moment_M_series(lambda, mu, o.n, o.cap),
                              ls_series(shape, OrderType::ge_gt(o.n), o.cap)));
        QSeries dual = ls_series(shape, OrderType::lt_le(o.n), o.cap);
        if (shape.size() & 1) dual = -dual;
        out.push_back(compare("N " + shape.to_string(), dual_N_series(lambda, mu, o.n, o.cap), dual));
    }
    return out;
}

Lines v_moment_product(const VerifyOptions& o) {
    require_shape(o);
    const Partition lambda = parse_straight(o.shape);
    const SpecParams p = o.params.resolve();
    const Partition empty;
    QSeries dual = ls_product(lambda, OrderType::lt_le(o.n), o.cap);
    if (lambda.size() & 1) dual = -dual;
    const std::string base = sn(lambda.to_string(), o.n);
    return {compare("M " + base, mixed_moment_M_series(lambda, empty, o.n, o.cap), ls_product(lambda, OrderType::ge_gt(o.n), o.cap)),
            compare("N " + base, dual_N_series(lambda, empty, o.n, o.cap), dual),
            boolean("M closed " + base, mixed_moment_M(lambda, empty, o.n, p) == moment_closed(lambda, o.n, p)),
            boolean("N closed " + base, dual_N(lambda, empty, o.n, p) == dual_moment_closed(lambda, o.n, p))};
}

Lines v_selberg(const VerifyOptions& o) {
    const Partition lambda = parse_straight(o.shape);
    const SpecParams p = o.params.resolve();
    const BigRational tol = parse_tolerance(o.tol);
    const SelbergResult r = selberg_check(lambda, o.n, p, o.terms);
    const BigRational err = (r.ratio - r.closed).abs();
    return {boolean(sn(lambda.to_string(), o.n) + " K=" + std::to_string(o.terms), r.within_bound() && r.bound <= tol,
                    "error " + std::to_string(err.to_double()) + ", bound " + std::to_string(r.bound.to_double()) +
                        ", tolerance " + std::to_string(tol.to_double()))};
}

template <class Check>
Lines det_draws(const VerifyOptions& o, Check check) {
    Draws d(o.seed);
    Lines out;
    for (int i = 0; i < o.draws; ++i) {
        std::string label;
        const bool ok = with_draw(d, [&](const SpecParams& p) {
            std::vector<BigRational> x;
            while (static_cast<int>(x.size()) < o.n) {
                BigRational c = d.nonzero();
                if (std::find(x.begin(), x.end(), c) == x.end()) x.push_back(c);
            }
            label = "n=" + std::to_string(o.n) + " draw " + std::to_string(i + 1);
            return check(x, p);
        });
        out.push_back(boolean(label, ok));
    }
    return out;
}

Lines v_det_lemma(const VerifyOptions& o) { return det_draws(o, det_lemma_check); }
Lines v_det_prop(const VerifyOptions& o) { return det_draws(o, det_prop_check); }

struct Identity {
    IdentityInfo info;
    std::function<Lines(const VerifyOptions&)> run;
};

const std::vector<Identity>& registry() {
    static const std::vector<Identity> r{
        {{"lecture-hall", "sum of q^|l| over lecture hall partitions L_n equals 1/(q;q^2)_n"}, v_lecture_hall},
        {{"anti-lecture-hall", "sum over anti-lecture hall compositions AL_n equals (-q;q)_n/(q^2;q)_n"}, v_anti_lecture_hall},
        {{"closed", "L, Lbar, AL, ALbar truncated sets: enumeration equals the product formula in q, u, v"}, v_closed},
        {{"example-tableau", "example tableau of shape (6,6,4,3)/(3,1), n=5: type (>=,>), weights u^3v^3 and u^13v^11"}, v_example_tableau},
        {{"jt", "LS series of a skew shape equals both Jacobi-Trudi determinants in h and e"}, v_jt},
        {{"product", "LS series of a straight shape equals its product formula"}, v_product},
        {{"plus-minus", "T -> T+ is a bijection onto the positive families, shifting the entry sum by |shape|"}, v_plus_minus},
        {{"specialization", "LS^(n,>=,>) at u=v=0 equals s_l(1,q,...,q^(n-1))"}, v_specialization},
        {{"orthogonality", "sum_i (-1)^(i-n) h^(i+1)_(m-i) e^(i)_(i-n) = delta_mn, and the transposed sum"}, v_orthogonality},
        {{"lgv", "non-intersecting NW and NE path families equal their path determinants"}, v_lgv},
        {{"bijection", "paths <-> sequences and tableaux <-> non-intersecting paths round trip"}, v_bijection},
        {{"recurrence", "three-term recurrence and 2phi1 sum give the same monic p_n"}, v_recurrence},
        {{"moments", "(mu_ij)(nu_ij) = (nu_ij)(mu_ij) = I"}, v_moments},
        {{"alhc", "mu_nk = AL_(n,n-k) and nu_nk = (-1)^(n-k) L_(n,n-k) at a=-uv, b=-u/v"}, v_alhc},
        {{"functional", "L(x^n)/L(1) = mu_n0 and L(p_m p_n) = 0, within certified tail bounds"}, v_functional},
        {{"expansion", "s_l = sum M_lm p_m, p_l = sum N_lm s_m; M and N are signed skew LS series"}, v_expansion},
        {{"moment-product", "M_l and N_l as determinants equal their product formulas"}, v_moment_product},
        {{"selberg", "n-fold q-integral of s_l against the weight, over its normalization, equals M_l"}, v_selberg},
        {{"det-lemma", "det(1/((a x_j)_i (b/x_j)_i)) and its two polynomial forms"}, v_det_lemma},
        {{"det-prop", "det(x_j^i (b/x_j)_i / (a x_j)_i) and its polynomial form"}, v_det_prop},
    };
    return r;
}

const Identity& find_identity(const std::string& name) {
    for (const auto& id : registry())
        if (id.info.name == name) return id;
    throw std::invalid_argument("unknown identity '" + name + "'; see `lh selftest --list`");
}

// Returns true if every line passed.
bool print_lines(std::ostream& out, const std::string& name, const Lines& lines) {
    bool ok = true;
    for (const auto& l : lines) {
        out << (l.pass ? "PASS " : "FAIL ") << name << ' ' << l.label;
        if (!l.pass && !l.detail.empty()) out << ": " << l.detail;
        out << '\n';
        ok = ok && l.pass;
    }
    return ok;
}

// ---- selftest -------------------------------------------------------------

struct SelftestItem {
    std::string identity;
    VerifyOptions options;
};

VerifyOptions opts(std::function<void(VerifyOptions&)> f) {
    VerifyOptions o;
    f(o);
    return o;
}

std::vector<SelftestItem> selftest_battery(bool quick) {
    std::vector<SelftestItem> items;
    auto add = [&](std::string id, std::function<void(VerifyOptions&)> f) { items.push_back({std::move(id), opts(f)}); };
    add("lecture-hall", [](auto& o) { o.n = 5; });
    add("anti-lecture-hall", [](auto& o) { o.n = 5; });
    add("closed", [](auto& o) { o.n = 5; });
    add("example-tableau", [](auto&) {});
    const std::vector<std::pair<std::string, int>> skew = quick
        ? std::vector<std::pair<std::string, int>>{{"2,1", 3}, {"2,2/1", 3}, {"3,2/1", 2}}
        : std::vector<std::pair<std::string, int>>{{"2,1", 3}, {"2,2/1", 3}, {"3,2/1", 2}, {"3,3,1/2", 3},
                                                   {"4,2/1", 4}, {"2,2,2/1,1", 3}, {"6,6,4,3/3,1", 5}};
    for (const auto& [s, n] : skew) {
        add("jt", [&](auto& o) { o.shape = s; o.n = n; o.cap = 10; });
        add("lgv", [&](auto& o) { o.shape = s; o.n = n; o.cap = 8; });
        add("bijection", [&](auto& o) { o.shape = s; o.n = n; o.cap = 8; });
        add("plus-minus", [&](auto& o) { o.shape = s; o.n = n; o.cap = 6; });
    }
    add("bijection", [](auto&) {});
    // Positive-entry types only start at larger entry sums on this shape.
    for (auto [type, c] : {std::pair{"ge-gt", 18}, {"lt-le", 26}, {"gt-ge", 30}, {"le-lt", 40}})
        add("jt", [&](auto& o) { o.shape = "6,6,4,3/3,1"; o.n = 5; o.type = type; o.cap = c; });
    const int max_size = quick ? 3 : 4;
    for (int size = 0; size <= max_size; ++size)
        for (const auto& lambda : Partition::all_of_size(size))
            for (int n = std::max(1, lambda.length()); n <= (quick ? 3 : 4); ++n) {
                add("product", [&](auto& o) { o.shape = lambda.to_string(); o.n = n; o.cap = 12; });
                add("specialization", [&](auto& o) { o.shape = lambda.to_string(); o.n = n; o.cap = 12; });
                add("moment-product", [&](auto& o) { o.shape = lambda.to_string(); o.n = n; o.cap = 12; });
                if (n <= 3) add("expansion", [&](auto& o) { o.shape = lambda.to_string(); o.n = n; o.cap = 10; });
            }
    add("orthogonality", [](auto& o) { o.n = 6; o.cap = 12; });
    add("recurrence", [](auto& o) { o.n = 10; o.params.a = "-1/10"; o.params.b = "-1/7"; });
    add("moments", [&](auto& o) { o.draws = quick ? 3 : 20; });
    add("alhc", [](auto& o) { o.n = 5; });
    add("functional", [](auto& o) { o.n = 5; o.terms = 80; o.params.a = "-1/10"; o.params.b = "-1/7"; });
    for (const char* s : {"", "1", "2", "1,1", "2,1"})
        for (int n = 1; n <= 2; ++n) {
            if (Partition::parse(s).length() > n) continue;
            add("selberg", [&](auto& o) { o.shape = s; o.n = n; o.terms = 50; o.params.a = "-1/10"; o.params.b = "-1/7"; });
        }
    for (int n = 1; n <= 5; ++n) {
        add("det-lemma", [&](auto& o) { o.n = n; o.draws = quick ? 2 : 20; });
        add("det-prop", [&](auto& o) { o.n = n; o.draws = quick ? 2 : 20; });
    }
    return items;
}

unsigned thread_count() {
    if (const char* env = std::getenv("LH_THREADS")) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc() && *ptr == '\0' && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Items run on a small pool; each writes to its own buffer and the buffers
// are emitted in battery order.
bool run_battery(const std::vector<SelftestItem>& items, std::ostream& out) {
    std::vector<std::string> buffers(items.size());
    std::vector<char> ok(items.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            std::ostringstream s;
            try {
                ok[i] = print_lines(s, items[i].identity, find_identity(items[i].identity).run(items[i].options));
            } catch (const std::exception& e) {
                s << "FAIL " << items[i].identity << ' ' << items[i].options.shape << ": " << e.what() << '\n';
            }
            buffers[i] = s.str();
        }
    };
    const unsigned threads = std::min<std::size_t>(thread_count(), items.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    bool all = true;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out << buffers[i];
        all = all && ok[i];
        passed += ok[i] ? 1 : 0;
    }
    out << (all ? "PASS" : "FAIL") << " selftest " << passed << "/" << items.size() << " items\n";
    return all;
}

// ---- other verbs ----------------------------------------------------------

Json sequence_json(const BoundedSequence& s) {
    return Json{{"entries", s.entries}, {"weight", s.weight()}, {"u", s.u_exponent()}, {"v", s.v_exponent()}};
}

int cmd_enum(const std::string& variant, int n, int k, int cap, Format fmt, std::ostream& out) {
    const Variant v = parse_variant(variant);
    const auto seqs = enum_set(v, n, k, cap);
    if (fmt == Format::Tsv) {
        out << "entries\tweight\tu\tv\n";
        for (const auto& s : seqs) {
            std::string e;
            for (std::size_t i = 0; i < s.entries.size(); ++i) e += (i ? "," : "") + std::to_string(s.entries[i]);
            out << e << '\t' << s.weight() << '\t' << s.u_exponent() << '\t' << s.v_exponent() << '\n';
        }
        return 0;
    }
    Json list = Json::array();
    for (const auto& s : seqs) list.push_back(sequence_json(s));
    emit(out, Json{{"schema", kSchemaVersion}, {"variant", variant}, {"n", n}, {"k", k}, {"cap", cap},
                   {"count", seqs.size()}, {"sequences", list}});
    return 0;
}

void emit_series(std::ostream& out, Format fmt, Json header, const QSeries& s) {
    if (fmt == Format::Tsv) return write_series_tsv(out, s);
    header["series"] = to_json(s);
    emit(out, header);
}

int cmd_genfun(const std::string& variant, int n, int k, int cap, bool closed, Format fmt, std::ostream& out) {
    const Variant v = parse_variant(variant);
    const QSeries s = closed ? genfun_closed(v, n, k, cap) : genfun_enum(v, n, k, cap);
    emit_series(out, fmt,
                Json{{"schema", kSchemaVersion}, {"variant", variant}, {"n", n}, {"k", k}, {"cap", cap},
                     {"method", closed ? "closed" : "enum"}},
                s);
    return 0;
}

struct TableauxFlags {
    std::string shape;
    int n = 3;
    std::string type = "ge-gt";
    int cap = 12;
    bool count = false;
    bool list = false;
    std::string method = "enum";
};

int cmd_tableaux(const TableauxFlags& f, Format fmt, std::ostream& out) {
    const SkewShape shape = parse_shape(f.shape);
    const OrderType type = OrderType::parse(f.type, f.n);
    Json header{{"schema", kSchemaVersion}, {"shape", shape.to_string()}, {"n", f.n}, {"type", type.name()}, {"cap", f.cap}};
    if (f.count) {
        const auto c = count_tableaux(shape, type, f.cap);
        if (fmt == Format::Tsv)
            out << "count\n" << c << '\n';
        else {
            header["count"] = c;
            emit(out, header);
        }
        return 0;
    }
    if (f.list) {
        const auto all = enumerate_tableaux(shape, type, f.cap);
        if (fmt == Format::Tsv) {
            out << "entries\tsum\n";
            for (const auto& t : all) {
                std::string e;
                for (std::size_t i = 0; i < t.entries().size(); ++i) e += (i ? "," : "") + std::to_string(t.entries()[i]);
                out << e << '\t' << t.entry_sum() << '\n';
            }
            return 0;
        }
        Json list = Json::array();
        for (const auto& t : all) list.push_back(to_json(t));
        header["count"] = all.size();
        header["tableaux"] = list;
        emit(out, header);
        return 0;
    }
    QSeries s(f.cap);
    if (f.method == "enum")
        s = ls_series(shape, type, f.cap);
    else if (f.method == "jt-h")
        s = jacobi_trudi(shape, type, f.cap, JtForm::H);
    else if (f.method == "jt-e")
        s = jacobi_trudi(shape, type, f.cap, JtForm::E);
    else if (f.method == "product") {
        if (!shape.inner().empty()) throw std::invalid_argument("--method product needs a straight shape");
        s = ls_product(shape.outer(), type, f.cap);
    } else
        throw std::invalid_argument("unknown --method '" + f.method + "'");
    header["method"] = f.method;
    emit_series(out, fmt, header, s);
    return 0;
}

struct PathsFlags {
    std::string alhc;
    std::string lhp;
    std::string tableau;
    std::string shape;
    std::string family = "nw";
    int n = 0;
    int k = -1;
    std::string svg;
    double scale = 40.0;
};

// Rows separated by ';', entries by ','.
std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    for (std::string row; std::getline(ss, row, ';');) rows.push_back(parse_int_list(row));
    return rows;
}

int cmd_paths(const PathsFlags& f, std::ostream& out) {
    const int given = !f.alhc.empty() + !f.lhp.empty() + !f.tableau.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --from-alhc, --from-lhp, --tableau");
    if (f.n < 1) throw std::invalid_argument("--n must be positive");
    Json j{{"schema", kSchemaVersion}};
    std::vector<LatticePath> paths;
    bool round_trip = false;
    if (!f.tableau.empty()) {
        const Tableau t = Tableau::from_rows(parse_shape(f.shape), OrderType::ge_gt(f.n), parse_rows(f.tableau));
        if (!validate(t)) throw std::invalid_argument("--tableau is not a valid (n,>=,>) tableau");
        if (f.family == "nw") {
            paths = tableau_to_nw_paths(t);
            round_trip = nw_paths_to_tableau(paths, f.n) == t;
        } else if (f.family == "ne") {
            paths = tableau_to_ne_paths(t);
            round_trip = ne_paths_to_tableau(paths, f.n) == t;
        } else
            throw std::invalid_argument("--family must be nw or ne");
        j["tableau"] = to_json(t);
    } else {
        const bool nw = !f.alhc.empty();
        const auto entries = parse_int_list(nw ? f.alhc : f.lhp);
        const int k = f.k >= 0 ? f.k : static_cast<int>(entries.size());
        const BoundedSequence s{nw ? Variant::AL : Variant::L, f.n, k, entries};
        if (!s.is_valid()) throw std::invalid_argument("sequence is not in " + std::string(to_string(s.variant)) + "_{n,k}");
        paths = {path_from_sequence(s)};
        round_trip = sequence_from_path(paths[0]) == s && path_from_json(to_json(paths[0])) == paths[0];
        j["sequence"] = sequence_json(s);
        j["variant"] = to_string(s.variant);
    }
    Json list = Json::array();
    for (const auto& p : paths) list.push_back(to_json(p));
    j["paths"] = list;
    j["non_intersecting"] = vertex_disjoint(paths);
    j["round_trip"] = round_trip;
    if (!f.svg.empty()) {
        const std::string svg = paths_to_svg(paths, f.scale);
        if (f.svg == "-") {
            out << svg;
            return round_trip ? 0 : 1;
        }
        std::ofstream file(f.svg, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + f.svg);
        file << svg;
        j["svg"] = f.svg;
    }
    emit(out, j);
    return round_trip ? 0 : 1;
}

Json uni_json(const UniPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coefficients()) c.push_back(to_json(x));
    return c;
}

Json params_json(const SpecParams& p) {
    return Json{{"q", to_json(p.q)}, {"a", to_json(p.a)}, {"b", to_json(p.b)}};
}

}  // namespace

const std::vector<IdentityInfo>& identities() {
    static const std::vector<IdentityInfo> list = [] {
        std::vector<IdentityInfo> v;
        for (const auto& id : registry()) v.push_back(id.info);
        return v;
    }();
    return list;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lecture hall tableaux: enumeration, series, and identity checks", "lh"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

    std::string variant = "L";
    int n = 3, k = 0, cap = 12;
    auto* en = app.add_subcommand("enum", "list the members of a truncated lecture hall set");
    en->add_option("--variant", variant, "L, Lbar, AL, ALbar")->capture_default_str();
    en->add_option("--n", n)->required();
    en->add_option("--k", k)->required();
    en->add_option("--cap", cap, "maximum entry sum")->capture_default_str();
    bool json_out = false, tsv_out = false;
    auto add_format_flags = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", json_out, "JSON output (default)");
        sub->add_flag("--tsv", tsv_out, "TSV output")->excludes(j);
    };
    add_format_flags(en);

    auto* gf = app.add_subcommand("genfun", "generating function of a truncated set");
    bool closed = false, enumerated = false;
    gf->add_option("--variant", variant)->capture_default_str();
    gf->add_option("--n", n)->required();
    gf->add_option("--k", k)->required();
    gf->add_option("--cap", cap)->capture_default_str();
    auto* gf_closed = gf->add_flag("--closed", closed, "product formula");
    gf->add_flag("--enum", enumerated, "direct enumeration (default)")->excludes(gf_closed);
    add_format_flags(gf);

    TableauxFlags tf;
    auto* tb = app.add_subcommand("tableaux", "lecture hall tableaux of a skew shape");
    tb->add_option("--shape", tf.shape, "outer/inner, e.g. 6,6,4,3/3,1")->required();
    std::string tb_inner, ve_inner;
    tb->add_option("--inner", tb_inner, "inner partition, e.g. 3,1");
    tb->add_option("--n", tf.n)->required();
    tb->add_option("--type", tf.type, "ge-gt, lt-le, gt-ge, le-lt")->capture_default_str();
    tb->add_option("--cap", tf.cap)->capture_default_str();
    auto* tb_count = tb->add_flag("--count", tf.count, "number of tableaux with entry sum <= cap");
    auto* tb_list = tb->add_flag("--list", tf.list, "all tableaux with entry sum <= cap")->excludes(tb_count);
    bool series_flag = false;
    tb->add_flag("--series", series_flag, "generating series (default)")->excludes(tb_count)->excludes(tb_list);
    tb->add_option("--method", tf.method, "enum, jt-h, jt-e, product")->capture_default_str();
    add_format_flags(tb);

    PathsFlags pf;
    bool json_flag = false;
    auto* pa = app.add_subcommand("paths", "lattice paths for sequences and tableaux");
    pa->add_option("--from-alhc", pf.alhc, "anti-lecture hall composition, e.g. 5,4,5,5,3,3");
    pa->add_option("--from-lhp", pf.lhp, "lecture hall partition, e.g. 15,12,8,5,3,0");
    pa->add_option("--tableau", pf.tableau, "(n,>=,>) tableau rows, ';'-separated");
    pa->add_option("--shape", pf.shape, "shape for --tableau");
    pa->add_option("--family", pf.family, "nw or ne (for --tableau)")->capture_default_str();
    pa->add_option("--n", pf.n)->required();
    pa->add_option("--k", pf.k, "sequence length (default: entries given)");
    pa->add_option("--svg", pf.svg, "write an SVG drawing to this path ('-' for stdout)");
    pa->add_option("--scale", pf.scale, "SVG pixels per unit")->capture_default_str();
    pa->add_flag("--json", json_flag, "JSON output (default)");

    auto* qj = app.add_subcommand("qjacobi", "little q-Jacobi polynomials and moments");
    qj->require_subcommand(1);
    ParamFlags qp;
    int qn = 0, qk = 0;
    std::string qshape;
    auto* qpoly = qj->add_subcommand("poly", "monic p_n(x; a, b; q)");
    qpoly->add_option("--n", qn)->required();
    add_param_flags(qpoly, qp);
    auto* qmu = qj->add_subcommand("mu", "mixed moment mu_{n,k}");
    auto* qnu = qj->add_subcommand("nu", "dual mixed moment nu_{n,k}");
    for (auto* sub : {qmu, qnu}) {
        sub->add_option("--n", qn)->required();
        sub->add_option("--k", qk)->required();
        add_param_flags(sub, qp);
    }
    auto* qmulti = qj->add_subcommand("multi", "multivariate p_lambda(x_1..x_n)");
    qmulti->add_option("--shape", qshape)->required();
    qmulti->add_option("--n", qn)->required();
    add_param_flags(qmulti, qp);

    VerifyOptions vo;
    std::string identity;
    auto* ve = app.add_subcommand("verify", "check one identity; prints PASS/FAIL lines");
    ve->add_option("identity", identity, "identity name (see selftest --list)")->required();
    ve->add_option("--shape", vo.shape);
    ve->add_option("--inner", ve_inner, "inner partition for skew checks");
    ve->add_option("--n", vo.n)->capture_default_str();
    ve->add_option("--k", vo.k, "restrict to one k");
    ve->add_option("--cap", vo.cap)->capture_default_str();
    ve->add_option("--size", vo.size, "moment matrix size")->capture_default_str();
    ve->add_option("--type", vo.type, "tableau type or 'all'")->capture_default_str();
    ve->add_option("--variant", vo.variant, "variant or 'all'")->capture_default_str();
    ve->add_option("--terms", vo.terms, "q-integral terms K per variable")->capture_default_str();
    ve->add_option("--tol", vo.tol, "required bound, e.g. 1e-15")->capture_default_str();
    ve->add_option("--draws", vo.draws, "random parameter draws")->capture_default_str();
    ve->add_option("--seed", vo.seed)->capture_default_str();
    add_param_flags(ve, vo.params);

    bool list_only = false, quick = false;
    auto* st = app.add_subcommand("selftest", "run the regression battery");
    st->add_flag("--list", list_only, "print the identity table");
    st->add_flag("--quick", quick, "smaller battery");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (tsv_out) format = "tsv";
    if (json_out) format = "json";
    const Format fmt = format == "tsv" ? Format::Tsv : Format::Json;

    try {
        merge_inner(tf.shape, tb_inner);
        merge_inner(vo.shape, ve_inner);
        if (*en) return cmd_enum(variant, n, k, cap, fmt, out);
        if (*gf) return cmd_genfun(variant, n, k, cap, closed, fmt, out);
        if (*tb) return cmd_tableaux(tf, fmt, out);
        if (*pa) return cmd_paths(pf, out);
        if (*qj) {
            const SpecParams p = qp.resolve();
            Json j{{"schema", kSchemaVersion}, {"params", params_json(p)}};
            if (*qpoly) {
                j["n"] = qn;
                j["coefficients"] = uni_json(little_q_jacobi(qn, p));
                j["recurrence_agrees"] = true;
            } else if (*qmu || *qnu) {
                j["n"] = qn;
                j["k"] = qk;
                j[*qmu ? "mu" : "nu"] = to_json(*qmu ? mu_mixed(qn, qk, p) : nu_mixed(qn, qk, p));
            } else {
                j["shape"] = Partition::parse(qshape).to_string();
                j["n"] = qn;
                j["polynomial"] = to_json(multivariate_p(Partition::parse(qshape), qn, p));
            }
            emit(out, j);
            return 0;
        }
        if (*ve) return print_lines(out, identity, find_identity(identity).run(vo)) ? 0 : 1;
        if (*st) {
            if (list_only) {
                for (const auto& id : identities()) out << id.name << '\t' << id.statement << '\n';
                return 0;
            }
            return run_battery(selftest_battery(quick), out) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "lh: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "lh: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "lh: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace lhcli
