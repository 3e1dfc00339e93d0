#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minkradii/certificates.hpp"
#include "minkradii/constructions.hpp"
#include "minkradii/error.hpp"
#include "minkradii/radii.hpp"
#include "minkradii/theorems.hpp"

namespace py = pybind11;
using namespace minkradii;

namespace {

// Coordinates cross the boundary as exact strings; Python turns them into
// fractions.Fraction on the way in and receives Fraction objects back.
using Rows = std::vector<std::vector<std::string>>;

Rational rat(const std::string& s) { return Rational::parse(s); }

Vector vec(const std::vector<std::string>& row) {
  std::vector<Rational> out;
  for (const auto& s : row) out.push_back(rat(s));
  return Vector(std::move(out));
}

VPolytope body(const Rows& rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidBody, "a body needs at least one point");
  std::vector<Vector> pts;
  for (const auto& r : rows) pts.push_back(vec(r));
  const std::size_t n = pts.front().dim();
  return VPolytope(n, std::move(pts)).canonical();
}

py::object frac(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.str());
}

py::list py_vec(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(frac(x));
  return out;
}

py::list py_points(const std::vector<Vector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(py_vec(v));
  return out;
}

py::object opt(const std::optional<Rational>& q) { return q ? frac(*q) : py::none(); }

py::dict radii(const RadiiResult& r) {
  py::dict d;
  d["value"] = frac(r.value);
  d["translation"] = py_vec(r.translation);
  d["attaining"] = r.attaining;
  return d;
}

py::dict chain(const ChainReport& rep) {
  py::dict d;
  d["name"] = to_string(rep.id);
  py::list values, relations;
  for (const auto& v : rep.values) values.append(frac(v));
  for (auto r : rep.relations) relations.append(to_string(r));
  d["values"] = values;
  d["relations"] = relations;
  d["holds"] = rep.holds;
  d["notes"] = rep.notes;
  return d;
}

py::dict conditions(const ConditionVector& cv) {
  py::dict d;
  py::list items;
  for (std::size_t i = 0; i < cv.names.size(); ++i) items.append(py::make_tuple(cv.names[i], bool(cv.values[i])));
  d["conditions"] = items;
  d["consistent"] = cv.consistent;
  d["notes"] = cv.notes;
  return d;
}

py::dict inequalities(const InequalityReport& rep) {
  py::dict d;
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict e;
    e["name"] = c.name;
    e["lhs"] = frac(c.lhs);
    e["rhs"] = frac(c.rhs);
    e["holds"] = c.holds();
    e["tight"] = c.tight();
    checks.append(e);
  }
  d["checks"] = checks;
  d["implications"] = rep.implications;
  d["notes"] = rep.notes;
  d["holds"] = rep.holds();
  return d;
}

py::dict pair(const ExamplePair& p) {
  py::dict d;
  d["family"] = to_string(p.family);
  d["simplex"] = py_points(p.simplex.vertices());
  d["gauge"] = py_points(p.gauge.vertices());
  py::dict params;
  for (const auto& [k, v] : p.parameters) params[py::str(k)] = frac(v);
  d["parameters"] = params;
  d["point"] = p.point ? py::object(py_vec(*p.point)) : py::none();
  return d;
}

ChainId chain_id(const std::string& name) {
  const auto id = chain_from_string(name);
  if (!id) throw Error(ErrorKind::ParameterViolation, "unknown chain \"" + name + "\"");
  return *id;
}

}  // namespace

PYBIND11_MODULE(_minkradii, m) {
  m.doc() = "Exact generalized radii of rational polytopes";
  py::register_exception<Error>(m, "MinkradiiError", PyExc_ValueError);

  m.def("canonical", [](const Rows& k) { return py_points(body(k).vertices()); });
  m.def("circumradius", [](const Rows& k, const Rows& c) -> py::object {
    const auto r = circumradius(body(k), body(c));
    return r ? py::object(radii(*r)) : py::none();
  });
  m.def("inradius", [](const Rows& k, const Rows& c) { return radii(inradius(body(k), body(c))); });
  m.def("diameter", [](const Rows& k, const Rows& c) { return radii(diameter(body(k), body(c))); });
  m.def("asymmetry", [](const Rows& k) {
    const auto a = asymmetry(body(k));
    return py::make_tuple(frac(a.s), py_vec(a.center));
  });
  m.def("jung_ratio", [](const Rows& k, const Rows& c) { return frac(jung_ratio(body(k), body(c))); });
  m.def("sym_gauge_norm",
        [](const std::vector<std::string>& z, const Rows& c) { return opt(sym_gauge_norm(vec(z), body(c))); });
  m.def("is_constant_width", [](const Rows& k, const Rows& c) { return is_constant_width(body(k), body(c)); });

  m.def("chain_names", [] {
    std::vector<std::string> out;
    for (auto id : kAllChains) out.emplace_back(to_string(id));
    return out;
  });
  m.def("eval_chain",
        [](const std::string& name, const Rows& k, const Rows& c) { return chain(eval_chain(chain_id(name), body(k), body(c))); });
  m.def("is_minkowski_concentric", [](const Rows& k, const Rows& c) { return is_minkowski_concentric(body(k), body(c)); });
  m.def("is_mirrored_concentric", [](const Rows& k, const Rows& c) { return is_mirrored_concentric(body(k), body(c)); });
  m.def("are_mutually_concentric", [](const Rows& k, const Rows& c, bool mirrored) {
    return are_mutually_concentric(body(k), body(c), mirrored);
  }, py::arg("k"), py::arg("c"), py::arg("mirrored") = false);
  m.def("simplex_complete", [](const Rows& s, const Rows& c) {
    const auto r = simplex_complete(body(s), body(c));
    py::dict d;
    d["complete"] = r.complete;
    d["difference_inside"] = r.difference_inside;
    d["center"] = r.center ? py::object(py_vec(*r.center)) : py::none();
    return d;
  });
  m.def("completeness", [](const Rows& k, const Rows& c) {
    PairMetrics pm(body(k), body(c));
    return std::string(to_string(decide_completeness(pm)));
  });
  m.def("check_radius_ratios", [](const Rows& k, const Rows& c) {
    PairMetrics pm(body(k), body(c));
    return inequalities(check_radius_ratios(pm));
  });
  m.def("check_ratio_bounds", [](const Rows& k, const Rows& c) {
    PairMetrics pm(body(k), body(c));
    return inequalities(check_ratio_bounds(pm));
  });
  m.def("check_breadth_split", [](const Rows& c, const std::string& r, const Rows& dirs) {
    std::vector<Vector> ds;
    for (const auto& d : dirs) ds.push_back(vec(d));
    return inequalities(check_breadth_split(body(c), rat(r), ds));
  });
  m.def("simplex_equality_conditions",
        [](const Rows& s, const Rows& c) { return conditions(simplex_equality_conditions(body(s), body(c))); });
  m.def("planar_triangle_conditions",
        [](const Rows& s, const Rows& c) { return conditions(planar_triangle_conditions(body(s), body(c))); });
  m.def("decompose_triangle_blend", [](const Rows& s, const Rows& c) -> py::object {
    const auto b = decompose_triangle_blend(body(s), body(c));
    return b ? py::object(py::make_tuple(frac(b->lambda), py_vec(b->translation))) : py::none();
  });

  m.def("extract", [](const Rows& k, const Rows& c) {
    const Extraction ex = extract(body(k), body(c));
    py::dict d;
    d["radius"] = frac(ex.radius);
    d["translation"] = py_vec(ex.translation);
    d["container"] = py_points(ex.container.vertices());
    d["contacts"] = py_points(ex.certificate.contacts);
    d["normals"] = py_points(ex.certificate.normals);
    py::list w;
    for (const auto& x : ex.certificate.weights) w.append(frac(x));
    d["weights"] = w;
    d["perturbed"] = ex.perturbed;
    return d;
  });
  m.def("validate", [](const Rows& k, const Rows& container, const Rows& contacts, const Rows& normals,
                       const std::vector<std::string>& weights) {
    ContainmentCertificate cert;
    for (const auto& p : contacts) cert.contacts.push_back(vec(p));
    for (const auto& a : normals) cert.normals.push_back(vec(a));
    for (const auto& w : weights) cert.weights.push_back(rat(w));
    return validate(body(k), body(container), cert);
  });

  m.def("standard_centered_simplex", [](std::size_t n) { return py_points(standard_centered_simplex(n).vertices()); });
  m.def("sandwich_pair", [](std::size_t n, const std::string& l, const std::string& mu, bool outer) {
    return pair(sandwich_pair(n, rat(l), rat(mu), outer ? Sandwich::Outer : Sandwich::Inner));
  });
  m.def("complete_nonconcentric_pair", [](std::size_t n) { return pair(complete_nonconcentric_pair(n)); });
  m.def("triangle_blend_pair", [](const std::string& l) { return pair(triangle_blend_pair(rat(l))); });
}
