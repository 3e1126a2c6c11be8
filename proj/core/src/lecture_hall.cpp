#include "lht/lecture_hall.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lht {

namespace {

struct ChainRule {
    std::vector<int> s;
    bool strict;
    bool last_positive;
};

ChainRule rule_for(Variant v, int n, int k) {
    switch (v) {
        case Variant::L: return {denominators(v, n, k), true, false};
        case Variant::Lbar: return {denominators(v, n, k), false, true};
        case Variant::AL: return {denominators(v, n, k), false, false};
        case Variant::ALbar: return {denominators(v, n, k), true, true};
    }
    throw std::logic_error("unknown variant");
}

// Smallest e_i allowed by its right neighbour e_{i+1}.
std::int64_t lower_bound_from(const ChainRule& r, std::size_t i, std::int64_t next) {
    const std::int64_t num = next * r.s[i];
    const std::int64_t den = r.s[i + 1];
    return r.strict ? floor_div(num, den) + 1 : ceil_div(num, den);
}

// Visits every sequence obeying the rule with entry sum <= cap. Entries are
// chosen from the last one backwards so each step has a single lower bound.
void for_each_chain(const ChainRule& r, int cap, const std::function<void(const std::vector<int>&, int)>& visit) {
    const std::size_t k = r.s.size();
    std::vector<int> e(k, 0);
    if (k == 0) {
        visit(e, 0);
        return;
    }
    auto min_completion = [&](std::size_t i, std::int64_t value) {
        std::int64_t total = 0;
        for (std::size_t j = i; j-- > 0;) {
            value = lower_bound_from(r, j, value);
            total += value;
            if (total > cap) break;
        }
        return total;
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        std::int64_t lo = (i == k - 1) ? (r.last_positive ? 1 : 0) : lower_bound_from(r, i, e[i + 1]);
        for (std::int64_t x = lo; used + x <= cap; ++x) {
            if (used + x + min_completion(i, x) > cap) break;
            e[i] = static_cast<int>(x);
            if (i == 0)
                visit(e, used + static_cast<int>(x));
            else
                rec(i - 1, used + static_cast<int>(x));
        }
    };
    rec(k - 1, 0);
}

int stat_part(int e, int s, bool ceiling) {
    return static_cast<int>(ceiling ? ceil_div(e, s) : floor_div(e, s));
}

void check_nk(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

LaurentPoly mono(long c, int u, int v) { return LaurentPoly::monomial(BigInt(c), u, v); }

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::L: return "L";
        case Variant::Lbar: return "Lbar";
        case Variant::AL: return "AL";
        case Variant::ALbar: return "ALbar";
    }
    return "?";
}

Variant parse_variant(std::string_view text) {
    if (text == "L") return Variant::L;
    if (text == "Lbar") return Variant::Lbar;
    if (text == "AL") return Variant::AL;
    if (text == "ALbar") return Variant::ALbar;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

bool uses_ceiling(Variant v) { return v == Variant::Lbar || v == Variant::ALbar; }

std::vector<int> denominators(Variant v, int n, int k) {
    check_nk(n, k);
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[i] = (v == Variant::L || v == Variant::Lbar) ? n - i : n - k + 1 + i;
    return s;
}

std::vector<int> BoundedSequence::denominators() const { return lht::denominators(variant, n, k); }

int BoundedSequence::weight() const {
    int w = 0;
    for (int e : entries) w += e;
    return w;
}

int BoundedSequence::u_exponent() const {
    auto s = denominators();
    int t = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) t += stat_part(entries[i], s[i], uses_ceiling(variant));
    return t;
}

int BoundedSequence::v_exponent() const {
    auto s = denominators();
    int t = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) t += stat_part(entries[i], s[i], uses_ceiling(variant)) & 1;
    return t;
}

bool BoundedSequence::is_valid() const {
    if (k < 0 || k > n || static_cast<int>(entries.size()) != k) return false;
    const ChainRule r = rule_for(variant, n, k);
    for (int e : entries)
        if (e < 0) return false;
    if (k == 0) return true;
    for (int i = 0; i + 1 < k; ++i) {
        const std::int64_t lhs = static_cast<std::int64_t>(entries[i]) * r.s[i + 1];
        const std::int64_t rhs = static_cast<std::int64_t>(entries[i + 1]) * r.s[i];
        if (r.strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
    return !r.last_positive || entries[k - 1] > 0;
}

std::vector<BoundedSequence> enum_set(Variant v, int n, int k, int cap) {
    check_nk(n, k);
    std::vector<BoundedSequence> out;
    for_each_chain(rule_for(v, n, k), cap, [&](const std::vector<int>& e, int) { out.push_back({v, n, k, e}); });
    std::sort(out.begin(), out.end());
    return out;
}

QSeries genfun_enum(Variant v, int n, int k, int cap) {
    check_nk(n, k);
    using Key = std::tuple<int, int, int, int>;
    static std::mutex mutex;
    static std::map<Key, QSeries> cache;
    const Key key{static_cast<int>(v), n, k, cap};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const ChainRule r = rule_for(v, n, k);
    const bool ceiling = uses_ceiling(v);
    MonomialTally tally(cap, cap + k, k);
    for_each_chain(r, cap, [&](const std::vector<int>& e, int weight) {
        int u = 0, odd = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const int part = stat_part(e[i], r.s[i], ceiling);
            u += part;
            odd += part & 1;
        }
        tally.add(weight, u, odd);
    });
    QSeries result = tally.to_series();
    std::lock_guard lock(mutex);
    cache.emplace(key, result);
    return result;
}

QSeries genfun_closed(Variant v, int n, int k, int cap) {
    check_nk(n, k);
    const bool bar = uses_ceiling(v);
    const bool lecture = v == Variant::L || v == Variant::Lbar;
    const int den_base = lecture ? 2 * n - k + 1 : 2 * n - 2 * k + 2;
    if (k > 0 && den_base < 1) throw std::logic_error("genfun_closed: denominator has a q^0 factor");
    // numerator (−u v^{±1} q^{n−k+1})_k, denominator (u² q^{den_base})_k
    QSeries r = gauss_binomial(n, k, cap);
    r *= qpoch_series(mono(-1, 1, bar ? -1 : 1), n - k + 1, k, cap);
    r *= qpoch_inverse_series(mono(1, 2, 0), den_base, k, cap);
    int qshift = 0;
    if (v == Variant::L) qshift = k * (k - 1) / 2;
    if (v == Variant::Lbar) qshift = k * (k + 1) / 2;
    if (v == Variant::ALbar) qshift = k;
    if (bar) r *= mono(1, k, k);
    return r.shifted(qshift);
}

BoundedSequence plus_map(const BoundedSequence& s) {
    if (s.variant != Variant::L && s.variant != Variant::AL) throw std::invalid_argument("plus_map: needs an L or AL member");
    if (!s.is_valid()) throw std::invalid_argument("plus_map: invalid input sequence");
    BoundedSequence r{s.variant == Variant::L ? Variant::Lbar : Variant::ALbar, s.n, s.k, s.entries};
    for (int& e : r.entries) ++e;
    return r;
}

BoundedSequence minus_map(const BoundedSequence& s) {
    if (s.variant != Variant::Lbar && s.variant != Variant::ALbar)
        throw std::invalid_argument("minus_map: needs an Lbar or ALbar member");
    if (!s.is_valid()) throw std::invalid_argument("minus_map: invalid input sequence");
    BoundedSequence r{s.variant == Variant::Lbar ? Variant::L : Variant::AL, s.n, s.k, s.entries};
    for (int& e : r.entries) --e;
    return r;
}

QSeries h_entry(int n, int k, int cap, bool bar) {
    if (k < 0) return QSeries(cap);
    if (k == 0) return QSeries::one(cap);
    if (n < 1) throw std::invalid_argument("h_series: need n >= 1");
    return genfun_enum(bar ? Variant::ALbar : Variant::AL, n + k - 1, k, cap);
}

QSeries e_entry(int n, int k, int cap, bool bar) {
    if (k < 0 || k > n) return QSeries(cap);
    return genfun_enum(bar ? Variant::Lbar : Variant::L, n, k, cap);
}

QSeries h_series(int n, int k, int cap) {
    if (n < 1 || k < 0) throw std::invalid_argument("h_series: need n >= 1 and k >= 0");
    return h_entry(n, k, cap, false);
}

QSeries hbar_series(int n, int k, int cap) {
    if (n < 1 || k < 0) throw std::invalid_argument("hbar_series: need n >= 1 and k >= 0");
    return h_entry(n, k, cap, true);
}

QSeries e_series(int n, int k, int cap) {
    check_nk(n, k);
    return e_entry(n, k, cap, false);
}

QSeries ebar_series(int n, int k, int cap) {
    check_nk(n, k);
    return e_entry(n, k, cap, true);
}

bool orthogonality_check(int m, int n, int cap) {
    if (m < 0 || n < 0) throw std::invalid_argument("orthogonality_check: negative index");
    const QSeries delta = m == n ? QSeries::one(cap) : QSeries(cap);
    QSeries he(cap), eh(cap);
    for (int i = 0; i <= m; ++i) {
        QSeries t = h_entry(i + 1, m - i, cap, false) * e_entry(i, i - n, cap, false);
        if ((i - n) & 1) t = -t;
        he += t;
        QSeries s = e_entry(m, m - i, cap, false) * h_entry(n + 1, i - n, cap, false);
        if ((m - i) & 1) s = -s;
        eh += s;
    }
    return he == delta && eh == delta;
}

QSeries lecture_hall_partition_series(int n, int cap) {
    if (n < 0) throw std::invalid_argument("lecture_hall_partition_series: negative n");
    ChainRule r{denominators(Variant::L, n, n), false, false};
    MonomialTally tally(cap, 0, 0);
    for_each_chain(r, cap, [&](const std::vector<int>&, int weight) { tally.add(weight, 0, 0); });
    return tally.to_series();
}

std::ostream& operator<<(std::ostream& os, const BoundedSequence& s) {
    os << to_string(s.variant) << "_{" << s.n << "," << s.k << "}(";
    for (std::size_t i = 0; i < s.entries.size(); ++i) os << (i ? "," : "") << s.entries[i];
    return os << ")";
}

}  // namespace lht
