#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minkradii/rational.hpp"

namespace minkradii {

/// Convex body given as the convex hull of a finite point list.
///
/// Construction only checks shape (common dimension, at least two distinct
/// points). `canonical()` drops duplicates and every point lying in the hull
/// of the others, and sorts the survivors lexicographically; vertex-set
/// comparisons are only meaningful between canonical bodies.
class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<Vector> points);
  explicit VPolytope(std::vector<Vector> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vector& operator[](std::size_t i) const { return vertices_[i]; }
  bool is_canonical() const { return canonical_; }

  VPolytope canonical() const;

  /// Image under x ↦ factor·x + shift (factor ≠ 0). Canonical bodies stay
  /// canonical since such maps send vertices to vertices.
  VPolytope affine_image(const Rational& factor, const Vector& shift) const;

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  struct CanonicalTag {};
  VPolytope(CanonicalTag, std::size_t dim, std::vector<Vector> vertices);

  std::size_t dim_;
  std::vector<Vector> vertices_;
  bool canonical_ = false;
};

struct Halfspace {
  Vector normal;
  Rational offset;  ///< normal·x ≤ offset
};

class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
};

struct Support {
  Rational value;
  std::vector<std::size_t> argmax;  ///< indices of all attaining vertices
};

/// h(K, a) = max over vertices of a·v.
Support support(const VPolytope& body, const Vector& direction);
Rational support_value(const VPolytope& body, const Vector& direction);

VPolytope minkowski_sum(const VPolytope& k, const VPolytope& l);
/// rho must be positive; a zero dilate would be a singleton.
VPolytope scale(const VPolytope& k, const Rational& rho);
VPolytope negate(const VPolytope& k);
VPolytope translate(const VPolytope& k, const Vector& t);
/// K + (−K), canonical and origin-symmetric.
VPolytope difference_body(const VPolytope& k);

bool contains_point(const VPolytope& body, const Vector& x);
bool contains_point(const HPolytope& body, const Vector& x);
/// Every point of `inner` lies in `outer` (no translation).
bool contains(const VPolytope& outer, const VPolytope& inner);

/// Exact facet description of an n-simplex given by n+1 affinely independent
/// vertices. Facet i is opposite vertex i; normals are primitive integer
/// vectors.
HPolytope simplex_hrep(const VPolytope& simplex);

/// Brute-force vertex enumeration over all dim-subsets of halfspaces.
/// Guarded to dim ≤ 4 and ≤ 16 halfspaces.
VPolytope enumerate_vertices(const HPolytope& p);

HPolytope intersect(const HPolytope& p, const HPolytope& q);

/// Arithmetic mean of the listed points (the centroid for a simplex).
Vector centroid(const VPolytope& body);

/// Dimension of the affine hull of the points.
std::size_t affine_dimension(const VPolytope& body);
bool is_full_dimensional(const VPolytope& body);
bool is_simplex(const VPolytope& body);

/// Facet balance Σ length(F)·unit normal(F) = 0 for a planar polygon,
/// evaluated as the sum of edge vectors rotated by 90° in boundary order.
bool polygon_facet_balance(const VPolytope& polygon);
/// Polygon vertices in counter-clockwise boundary order.
std::vector<Vector> polygon_boundary(const VPolytope& polygon);

struct SymmetryResult {
  bool symmetric = false;
  std::optional<Vector> center;
};
SymmetryResult is_centrally_symmetric(const VPolytope& body);

/// Vertex-set equality of the canonical forms.
bool same_body(const VPolytope& a, const VPolytope& b);

}  // namespace minkradii
