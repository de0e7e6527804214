#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanokit/bounds.hpp"
#include "fanokit/curves.hpp"
#include "fanokit/osculating.hpp"
#include "fanokit/section.hpp"
#include "fanokit/semple.hpp"

namespace fanokit {

using Json = nlohmann::ordered_json;

/// "Q" or "p=7".
Field parse_field_spec(const std::string& text);

Json to_json(const Field& field);
/// "Q", {"p": 7} or "p=7".
Field field_from_json(const Json& j);

/// Rationals as "p/q" strings, residues as integers.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& field);

/// {"rows", "cols", "entries", "field"}.
Json to_json(const Matrix& m);
/// The "field" key, when present, overrides `fallback`.
Matrix matrix_from_json(const Json& j, const Field& fallback);

/// {"k", "n", "field", "coords": {"1,2": ...}}.
Json to_json(const PluckerPoint& p);
PluckerPoint plucker_from_json(const Json& j, const Field& fallback);
Json to_json(const DualHyperplane& h);

/// {"k", "n", "field", "y", "x": [[...]]}.
Json to_json(const SempleChartPoint& c);
SempleChartPoint semple_point_from_json(const Json& j, const Field& fallback);

Json to_json(const std::vector<Polynomial>& polys);
Json to_json(const FanoSystem& sys);
Json to_json(const PluckerCurve& curve);
Json to_json(const SmoothnessVerdict& v);

/// {"phi", "mu", "coeffs": {"0,0": ...}} with optional "r" and "n"; missing
/// values are inferred from the variables and keys used.
HypersurfaceFamily family_from_json(const Json& j, const Field& field);
Json to_json(const HypersurfaceFamily& fam);
Json to_json(const SectionSystem& sys);
Json to_json(const SectionSearchResult& result);

Json to_json(const BoundCertificate& c);
Json to_json(const CertificateBundle& b);

}  // namespace fanokit
