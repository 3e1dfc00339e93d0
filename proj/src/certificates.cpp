#include "minkradii/certificates.hpp"

#include <algorithm>

#include "minkradii/lp.hpp"
#include "minkradii/radii.hpp"

namespace minkradii {

bool validate(const VPolytope& k, const VPolytope& container, const ContainmentCertificate& cert) {
  const std::size_t n = k.dim();
  const std::size_t m = cert.contacts.size();
  if (container.dim() != n || cert.normals.size() != m || cert.weights.size() != m) return false;
  if (m < 2 || m > n + 1) return false;
  Rational total;
  Vector balance(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Vector& p = cert.contacts[j];
    const Vector& a = cert.normals[j];
    if (p.dim() != n || a.dim() != n || a.is_zero()) return false;
    if (cert.weights[j].sign() <= 0) return false;
    total += cert.weights[j];
    balance += a * cert.weights[j];
    if (!contains_point(k, p)) return false;
    if (dot(a, p) != support_value(container, a)) return false;
  }
  return total == Rational(1) && balance.is_zero();
}

namespace {

// Keep at most n+1 of the normals while preserving 0 ∈ conv: a basic
// solution of {μ ≥ 0, Σ μ = 1, Σ μ_i a_i = 0} has at most n+1 nonzeros.
ContainmentCertificate caratheodory(std::vector<Vector> contacts, std::vector<Vector> normals) {
  const std::size_t n = contacts.front().dim();
  lp::Builder b;
  const std::size_t mu = b.add_vars(normals.size());
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<lp::Builder::Term> row;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (!normals[i][d].is_zero()) row.emplace_back(mu + i, normals[i][d]);
    }
    b.add_eq(std::move(row), 0);
  }
  std::vector<lp::Builder::Term> sum;
  for (std::size_t i = 0; i < normals.size(); ++i) sum.emplace_back(mu + i, 1);
  b.add_eq(std::move(sum), 1);
  const auto out = lp::solve(b.build());
  ContainmentCertificate cert;
  if (out.status != lp::Status::Optimal) return cert;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (out.primal[mu + i].sign() <= 0) continue;
    cert.contacts.push_back(std::move(contacts[i]));
    cert.normals.push_back(std::move(normals[i]));
    cert.weights.push_back(out.primal[mu + i]);
  }
  return cert;
}

// The dual block y_i of vertex i's coordinate rows is an outer normal of
// t + λC at v_i by complementary slackness, and the free translation column
// forces Σ_i y_i = 0. Contacts are the vertices with y_i ≠ 0.
ContainmentCertificate from_dual(const VPolytope& k, const lp::Outcome& out, const CircumradiusProgram& prog) {
  std::vector<Vector> contacts, normals;
  for (std::size_t i = 0; i < prog.body_size; ++i) {
    Vector y(prog.dim);
    for (std::size_t d = 0; d < prog.dim; ++d) y[d] = out.dual[prog.point_row(i, d)];
    if (y.is_zero()) continue;
    contacts.push_back(k[i]);
    normals.push_back(std::move(y));
  }
  if (contacts.empty()) return {};
  return caratheodory(std::move(contacts), std::move(normals));
}

}  // namespace

Extraction extract(const VPolytope& k_in, const VPolytope& c) {
  const VPolytope k = k_in.canonical();
  lp::Outcome out;
  CircumradiusProgram prog;
  const auto r = circumradius(k, c, &out, &prog);
  if (!r) throw Error(ErrorKind::InfiniteRadius, "no certificate for an infinite circumradius");
  Extraction ex{{}, r->value, r->translation, translate(scale(c.canonical(), r->value), r->translation), false};
  ex.certificate = from_dual(k, out, prog);
  if (validate(k, ex.container, ex.certificate)) return ex;

  // Fallback: by complementary slackness the first reading is valid for every
  // optimal basis, so this only guards against a misread dual. Re-solve with
  // K shifted off its centroid; the perturbed right-hand side changes the pivot
  // path and hence the basis, and the normals carry over unchanged.
  const Vector shift = centroid(k);
  const VPolytope moved = translate(k, -shift);
  lp::Outcome out2;
  CircumradiusProgram prog2;
  const auto r2 = circumradius(moved, c, &out2, &prog2);
  ex.perturbed = true;
  ex.certificate = from_dual(moved, out2, prog2);
  for (auto& p : ex.certificate.contacts) p += shift;
  if (!r2 || r2->value != ex.radius || !validate(k, ex.container, ex.certificate)) {
    throw Error(ErrorKind::DegenerateDual, "could not read a valid certificate from the circumradius dual");
  }
  return ex;
}

}  // namespace minkradii
