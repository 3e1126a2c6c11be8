#include "lht/serialize.hpp"

#include <stdexcept>

namespace lht {

Json to_json(const BigRational& r) { return r.to_string(); }

Json to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& t : p.terms()) arr.push_back(Json::array({t.u, t.v, t.coeff.get_str(10)}));
    return arr;
}

Json to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (int d = 0; d <= s.cap(); ++d)
        if (!s[d].is_zero()) coeffs.push_back(Json{{"q", d}, {"terms", to_json(s[d])}});
    return Json{{"schema", kSchemaVersion}, {"cap", s.cap()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"c", c.to_string()}});
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

BigRational bigrational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected rational string");
    return BigRational::parse(j.get<std::string>());
}

LaurentPoly laurent_from_json(const Json& j) {
    std::vector<LaurentTerm> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("malformed Laurent term");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), BigInt(t[2].get<std::string>(), 10)});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

QSeries qseries_from_json(const Json& j) {
    if (j.at("schema").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
    QSeries s(j.at("cap").get<int>());
    for (const auto& c : j.at("coeffs")) s.set(c.at("q").get<int>(), laurent_from_json(c.at("terms")));
    return s;
}

}  // namespace lht
