#pragma once

#include <nlohmann/json.hpp>

#include "lht/bigrational.hpp"
#include "lht/laurent_poly.hpp"
#include "lht/multipoly.hpp"
#include "lht/qseries.hpp"

namespace lht {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Canonical forms: terms sorted by exponent, exponents as integers,
// coefficients as decimal strings.
Json to_json(const BigRational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const QSeries& s);
Json to_json(const MultiPoly& p);

BigRational bigrational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);

}  // namespace lht
