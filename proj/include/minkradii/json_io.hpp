#pragma once

#include <string>

#include "json.hpp"
#include "minkradii/bodies.hpp"
#include "minkradii/certificates.hpp"
#include "minkradii/constructions.hpp"
#include "minkradii/radii.hpp"
#include "minkradii/rational.hpp"
#include "minkradii/theorems.hpp"

/// JSON encodings. Every number is an exact rational string; readers also
/// accept JSON integers but reject any floating-point literal.
namespace minkradii::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const VPolytope& body);  ///< {"dim", "vertices"}
Json to_json(const HPolytope& body);  ///< {"dim", "halfspaces": [{"normal", "offset"}]}
Json to_json(const ContainmentCertificate& cert);
Json to_json(const RadiiResult& r);
Json to_json(const ChainReport& rep);
Json to_json(const ConditionVector& cv);
Json to_json(const InequalityReport& rep);
Json to_json(const ExamplePair& pair);

Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
/// Accepts either format; an H-representation is turned into its vertices.
VPolytope body_from_json(const Json& j);
HPolytope hpolytope_from_json(const Json& j);
ContainmentCertificate certificate_from_json(const Json& j);
/// Bodies and point of an ExamplePair file; the family is read back from its name.
ExamplePair example_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors to ErrorKind::Parse.
Json parse(const std::string& text);

}  // namespace minkradii::json_io
