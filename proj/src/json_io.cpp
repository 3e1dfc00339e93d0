#include "minkradii/json_io.hpp"

#include "minkradii/error.hpp"

namespace minkradii::json_io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) fail("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

Json vectors(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<Vector> vectors_from(const Json& j) {
  if (!j.is_array()) fail("expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const VPolytope& body) { return Json{{"dim", body.dim()}, {"vertices", vectors(body.vertices())}}; }

Json to_json(const HPolytope& body) {
  Json hs = Json::array();
  for (const auto& h : body.halfspaces()) hs.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return Json{{"dim", body.dim()}, {"halfspaces", hs}};
}

Json to_json(const ContainmentCertificate& cert) {
  Json w = Json::array();
  for (const auto& x : cert.weights) w.push_back(to_json(x));
  return Json{{"contacts", vectors(cert.contacts)}, {"normals", vectors(cert.normals)}, {"weights", w}};
}

Json to_json(const RadiiResult& r) {
  return Json{{"value", to_json(r.value)}, {"translation", to_json(r.translation)}, {"attaining", r.attaining}};
}

Json to_json(const ChainReport& rep) {
  Json values = Json::array();
  for (const auto& v : rep.values) values.push_back(to_json(v));
  Json rels = Json::array();
  for (auto r : rep.relations) rels.push_back(to_string(r));
  return Json{{"chain", to_string(rep.id)}, {"values", values}, {"relations", rels},
              {"holds", rep.holds},      {"notes", rep.notes}};
}

Json to_json(const ConditionVector& cv) {
  Json conds = Json::array();
  for (std::size_t i = 0; i < cv.names.size(); ++i) conds.push_back(Json{{"name", cv.names[i]}, {"value", cv.values[i]}});
  return Json{{"conditions", conds}, {"consistent", cv.consistent}, {"notes", cv.notes}};
}

Json to_json(const InequalityReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(Json{{"name", c.name}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"holds", c.holds()},
                          {"tight", c.tight()}});
  Json imps = Json::array();
  for (const auto& [name, ok] : rep.implications) imps.push_back(Json{{"name", name}, {"holds", ok}});
  return Json{{"checks", checks}, {"implications", imps}, {"notes", rep.notes}, {"holds", rep.holds()}};
}

Json to_json(const ExamplePair& pair) {
  Json params = Json::object();
  for (const auto& [name, value] : pair.parameters) params[name] = to_json(value);
  Json out{{"family", to_string(pair.family)},
           {"parameters", params},
           {"simplex", to_json(pair.simplex)},
           {"gauge", to_json(pair.gauge)}};
  if (pair.point) out["point"] = to_json(*pair.point);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) fail("floating-point literal where an exact rational is required");
  fail("expected a rational string");
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty coordinate array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Vector(std::move(c));
}

VPolytope body_from_json(const Json& j) {
  if (j.is_object() && j.contains("halfspaces")) return enumerate_vertices(hpolytope_from_json(j));
  const std::size_t dim = dim_field(j);
  return VPolytope(dim, vectors_from(field(j, "vertices")));
}

HPolytope hpolytope_from_json(const Json& j) {
  const std::size_t dim = dim_field(j);
  const Json& hs = field(j, "halfspaces");
  if (!hs.is_array()) fail("\"halfspaces\" must be an array");
  std::vector<Halfspace> out;
  for (const auto& h : hs) out.push_back({vector_from_json(field(h, "normal")), rational_from_json(field(h, "offset"))});
  return HPolytope(dim, std::move(out));
}

ContainmentCertificate certificate_from_json(const Json& j) {
  ContainmentCertificate cert;
  cert.contacts = vectors_from(field(j, "contacts"));
  cert.normals = vectors_from(field(j, "normals"));
  const Json& w = field(j, "weights");
  if (!w.is_array()) fail("\"weights\" must be an array");
  for (const auto& x : w) cert.weights.push_back(rational_from_json(x));
  return cert;
}

ExamplePair example_from_json(const Json& j) {
  ExamplePair pair{Family::Random, body_from_json(field(j, "simplex")), body_from_json(field(j, "gauge")), {}, {}};
  const std::string family = field(j, "family").is_string() ? j.at("family").get<std::string>() : "";
  bool known = false;
  for (auto f : {Family::SandwichInner, Family::SandwichOuter, Family::CompleteNonconcentric, Family::TriangleBlend,
                 Family::Random}) {
    if (family == to_string(f)) {
      pair.family = f;
      known = true;
    }
  }
  if (!known) fail("unknown family \"" + family + "\"");
  if (j.contains("parameters")) {
    for (const auto& [name, value] : j.at("parameters").items()) pair.parameters.emplace_back(name, rational_from_json(value));
  }
  if (j.contains("point")) pair.point = vector_from_json(j.at("point"));
  return pair;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace minkradii::json_io
