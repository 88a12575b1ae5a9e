#pragma once

#include <json.hpp>

#include <string>

#include "nncone/families.hpp"
#include "nncone/membership.hpp"
#include "nncone/perron.hpp"
#include "nncone/rational_poly.hpp"
#include "nncone/sos.hpp"
#include "nncone/volume.hpp"

namespace nncone {

using Json = nlohmann::json;

/// Coefficients lowest degree first, e.g. "[1, -2, 1]". Throws
/// std::invalid_argument on malformed input or non-finite values.
Polynomial parse_polynomial(const std::string& text);
/// JSON array of rows. Throws std::invalid_argument unless square and finite.
SquareMatrix parse_matrix(const std::string& text);

void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);
void to_json(Json& j, const SquareMatrix& m);
void from_json(const Json& j, SquareMatrix& m);
void to_json(Json& j, const RationalPolynomial& p);
void from_json(const Json& j, RationalPolynomial& p);

void to_json(Json& j, const SearchConfig& c);
void from_json(const Json& j, SearchConfig& c);
void to_json(Json& j, const Witness& w);
void from_json(const Json& j, Witness& w);
/// Verdicts embed the search config (and so the seed) for replay.
Json verdict_json(const Verdict& v, const SearchConfig& cfg);

void to_json(Json& j, const FamilySpec& f);
void from_json(const Json& j, FamilySpec& f);

void to_json(Json& j, const StochasticDecomposition& d);
void to_json(Json& j, const SosDecomposition& d);
void to_json(Json& j, const VolumeEstimate& e);
void to_json(Json& j, const CompareReport& r);
void to_json(Json& j, const MaxTResult& r);
void to_json(Json& j, const SliceTrace& s);
void to_json(Json& j, const Violation& v);

}  // namespace nncone
