#include "minkradii/bodies.hpp"

#include <algorithm>
#include <numeric>

#include "minkradii/lp.hpp"

namespace minkradii {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, what);
}

std::vector<Vector> sorted_unique(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// x ∈ conv(points) via the convex-coefficient feasibility program.
bool in_hull(const std::vector<Vector>& points, const Vector& x) {
  if (points.empty()) return false;
  const std::size_t n = x.dim();
  for (std::size_t k = 0; k < n; ++k) {
    bool below = false;
    bool above = false;
    for (const auto& p : points) {
      below = below || p[k] <= x[k];
      above = above || p[k] >= x[k];
    }
    if (!below || !above) return false;
  }
  if (std::find(points.begin(), points.end(), x) != points.end()) return true;
  lp::Builder b;
  const std::size_t alpha = b.add_vars(points.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<lp::Builder::Term> row;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!points[i][k].is_zero()) row.emplace_back(alpha + i, points[i][k]);
    }
    b.add_eq(std::move(row), x[k]);
  }
  std::vector<lp::Builder::Term> sum;
  for (std::size_t i = 0; i < points.size(); ++i) sum.emplace_back(alpha + i, 1);
  b.add_eq(std::move(sum), 1);
  return lp::solve(b.build()).status == lp::Status::Optimal;
}

// Each returned point uniquely attains the min or max of some coordinate and
// is therefore a vertex without needing a membership program.
std::vector<bool> coordinate_extremes(const std::vector<Vector>& pts) {
  std::vector<bool> extreme(pts.size(), false);
  if (pts.empty()) return extreme;
  for (std::size_t k = 0; k < pts.front().dim(); ++k) {
    for (int dir : {-1, 1}) {
      std::size_t best = 0;
      bool unique = true;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto c = pts[i][k] <=> pts[best][k];
        if (c == 0) {
          unique = false;
        } else if ((dir > 0) == (c > 0)) {
          best = i;
          unique = true;
        }
      }
      if (unique) extreme[best] = true;
    }
  }
  return extreme;
}

}  // namespace

VPolytope::VPolytope(std::size_t dim, std::vector<Vector> points) : dim_(dim), vertices_(std::move(points)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidBody, "dimension must be positive");
  if (vertices_.empty()) throw Error(ErrorKind::InvalidBody, "body needs at least one point");
  for (const auto& v : vertices_) require_same_dim(v.dim(), dim_, "vertex dimension differs from body dimension");
  const bool all_equal =
      std::all_of(vertices_.begin(), vertices_.end(), [&](const Vector& v) { return v == vertices_.front(); });
  if (all_equal) throw Error(ErrorKind::InvalidBody, "singletons are not bodies");
}

namespace {
std::size_t leading_dim(const std::vector<Vector>& pts) { return pts.empty() ? 0 : pts.front().dim(); }
}  // namespace

// Copies rather than moves: the two arguments are evaluated in unspecified order.
VPolytope::VPolytope(std::vector<Vector> points) : VPolytope(leading_dim(points), points) {}

VPolytope::VPolytope(CanonicalTag, std::size_t dim, std::vector<Vector> vertices)
    : dim_(dim), vertices_(std::move(vertices)), canonical_(true) {}

VPolytope VPolytope::canonical() const {
  if (canonical_) return *this;
  std::vector<Vector> pts = sorted_unique(vertices_);
  const auto extreme = coordinate_extremes(pts);
  std::vector<bool> keep(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (extreme[i]) continue;
    std::vector<Vector> others;
    others.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i && keep[j]) others.push_back(pts[j]);
    }
    if (in_hull(others, pts[i])) keep[i] = false;
  }
  std::vector<Vector> verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (keep[i]) verts.push_back(std::move(pts[i]));
  }
  return VPolytope(CanonicalTag{}, dim_, std::move(verts));
}

VPolytope VPolytope::affine_image(const Rational& factor, const Vector& shift) const {
  if (factor.is_zero()) throw Error(ErrorKind::ParameterViolation, "affine image with zero factor");
  require_same_dim(dim_, shift.dim(), "affine_image shift");
  std::vector<Vector> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(v * factor + shift);
  if (!canonical_) return VPolytope(dim_, std::move(pts));
  std::sort(pts.begin(), pts.end());
  return VPolytope(CanonicalTag{}, dim_, std::move(pts));
}

bool operator==(const VPolytope& a, const VPolytope& b) { return same_body(a, b); }

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces) : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidBody, "dimension must be positive");
  for (const auto& h : halfspaces_) require_same_dim(h.normal.dim(), dim_, "halfspace normal dimension");
}

// ---------------------------------------------------------------------------

Support support(const VPolytope& body, const Vector& a) {
  require_same_dim(body.dim(), a.dim(), "support direction");
  Support s;
  for (std::size_t i = 0; i < body.size(); ++i) {
    Rational v = dot(a, body[i]);
    if (s.argmax.empty() || v > s.value) {
      s.value = std::move(v);
      s.argmax = {i};
    } else if (v == s.value) {
      s.argmax.push_back(i);
    }
  }
  return s;
}

Rational support_value(const VPolytope& body, const Vector& a) {
  require_same_dim(body.dim(), a.dim(), "support direction");
  Rational best = dot(a, body[0]);
  for (std::size_t i = 1; i < body.size(); ++i) best = max(best, dot(a, body[i]));
  return best;
}

VPolytope minkowski_sum(const VPolytope& k, const VPolytope& l) {
  require_same_dim(k.dim(), l.dim(), "minkowski_sum");
  const VPolytope kc = k.canonical();
  const VPolytope lc = l.canonical();
  std::vector<Vector> pts;
  pts.reserve(kc.size() * lc.size());
  for (const auto& v : kc.vertices()) {
    for (const auto& w : lc.vertices()) pts.push_back(v + w);
  }
  return VPolytope(k.dim(), std::move(pts)).canonical();
}

VPolytope scale(const VPolytope& k, const Rational& rho) {
  if (rho.sign() <= 0) throw Error(ErrorKind::ParameterViolation, "dilation factor must be positive");
  return k.affine_image(rho, Vector(k.dim()));
}

VPolytope negate(const VPolytope& k) { return k.affine_image(Rational(-1), Vector(k.dim())); }

VPolytope translate(const VPolytope& k, const Vector& t) {
  require_same_dim(k.dim(), t.dim(), "translate");
  return k.affine_image(Rational(1), t);
}

VPolytope difference_body(const VPolytope& k) { return minkowski_sum(k, negate(k)); }

bool contains_point(const VPolytope& body, const Vector& x) {
  require_same_dim(body.dim(), x.dim(), "contains_point");
  return in_hull(body.vertices(), x);
}

bool contains_point(const HPolytope& body, const Vector& x) {
  require_same_dim(body.dim(), x.dim(), "contains_point");
  return std::all_of(body.halfspaces().begin(), body.halfspaces().end(),
                     [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset; });
}

bool contains(const VPolytope& outer, const VPolytope& inner) {
  require_same_dim(outer.dim(), inner.dim(), "contains");
  const VPolytope o = outer.canonical();
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Vector& v) { return in_hull(o.vertices(), v); });
}

// ---------------------------------------------------------------------------

namespace {

// Scale a normal to a primitive integer vector (positive multiple).
Rational primitive_factor(const Vector& a) {
  mpz_class lcm_den = 1;
  for (const auto& x : a) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_class num = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return Rational(1);
  return Rational(mpq_class(lcm_den, g));
}

}  // namespace

HPolytope simplex_hrep(const VPolytope& s) {
  const std::size_t n = s.dim();
  if (s.size() != n + 1) {
    throw Error(ErrorKind::DegenerateSimplex, "an n-simplex needs exactly n+1 vertices");
  }
  std::vector<Halfspace> facets;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i) others.push_back(s[j]);
    }
    // Generalised cross product of the n-1 edge vectors from others[0].
    Vector normal(n);
    for (std::size_t col = 0; col < n; ++col) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 0; r + 1 < n; ++r) {
        const Vector edge = others[r + 1] - others[0];
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == col) continue;
          minor(r, cc++) = edge[c];
        }
      }
      Rational d = det(minor);
      normal[col] = (col % 2 == 0) ? d : -d;
    }
    Rational offset = dot(normal, others[0]);
    const Rational apex = dot(normal, s[i]);
    if (normal.is_zero() || apex == offset) {
      throw Error(ErrorKind::DegenerateSimplex, "vertices are affinely dependent");
    }
    if (apex > offset) {
      normal = -normal;
      offset = -offset;
    }
    const Rational f = primitive_factor(normal);
    facets.push_back({normal * f, offset * f});
  }
  return HPolytope(n, std::move(facets));
}

VPolytope enumerate_vertices(const HPolytope& p) {
  const std::size_t n = p.dim();
  const auto& hs = p.halfspaces();
  if (n > 4 || hs.size() > 16) {
    throw Error(ErrorKind::ScaleGuardExceeded, "vertex enumeration limited to dim <= 4 and <= 16 halfspaces");
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (int dir : {-1, 1}) {
      lp::Builder b;
      const std::size_t x = b.add_vars(n, lp::VarSign::Free);
      b.set_cost(x + k, Rational(-dir));
      for (const auto& h : hs) {
        std::vector<lp::Builder::Term> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (!h.normal[c].is_zero()) row.emplace_back(x + c, h.normal[c]);
        }
        b.add_le(std::move(row), h.offset);
      }
      const auto out = lp::solve(b.build());
      if (out.status == lp::Status::Infeasible) throw Error(ErrorKind::EmptyPolytope, "halfspaces have empty intersection");
      if (out.status == lp::Status::Unbounded) throw Error(ErrorKind::UnboundedInput, "polyhedron is unbounded");
    }
  }
  std::vector<Vector> pts;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (hs.size() >= n) {
    for (;;) {
      Matrix a(n, n);
      Vector rhs(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = hs[idx[r]].normal[c];
        rhs[r] = hs[idx[r]].offset;
      }
      const auto sol = solve_linear(a, rhs);
      if (sol.kind == LinearSolution::Kind::Unique && contains_point(p, sol.solution)) pts.push_back(sol.solution);
      // next combination
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == hs.size() - n + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  pts = sorted_unique(std::move(pts));
  if (pts.size() < 2) throw Error(ErrorKind::DegenerateBody, "polytope has fewer than two vertices");
  return VPolytope(n, std::move(pts)).canonical();
}

HPolytope intersect(const HPolytope& p, const HPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "intersect");
  std::vector<Halfspace> hs = p.halfspaces();
  hs.insert(hs.end(), q.halfspaces().begin(), q.halfspaces().end());
  return HPolytope(p.dim(), std::move(hs));
}

Vector centroid(const VPolytope& body) {
  Vector c(body.dim());
  for (const auto& v : body.vertices()) c += v;
  return c * Rational(mpq_class(1, static_cast<unsigned long>(body.size())));
}

std::size_t affine_dimension(const VPolytope& body) {
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < body.size(); ++i) diffs.push_back(body[i] - body[0]);
  if (diffs.empty()) return 0;
  return rank(Matrix::from_rows(diffs));
}

bool is_full_dimensional(const VPolytope& body) { return affine_dimension(body) == body.dim(); }

bool is_simplex(const VPolytope& body) {
  const VPolytope c = body.canonical();
  return c.size() == c.dim() + 1 && is_full_dimensional(c);
}

// ---------------------------------------------------------------------------

std::vector<Vector> polygon_boundary(const VPolytope& polygon) {
  if (polygon.dim() != 2) throw Error(ErrorKind::NotPlanar, "polygon must be 2-dimensional");
  const VPolytope p = polygon.canonical();
  if (p.size() < 3 || !is_full_dimensional(p)) throw Error(ErrorKind::DegeneratePolygon, "polygon is not 2-dimensional");
  const Vector c = centroid(p);
  std::vector<Vector> rel;
  for (const auto& v : p.vertices()) rel.push_back(v - c);
  auto upper = [](const Vector& v) { return v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0); };
  std::sort(rel.begin(), rel.end(), [&](const Vector& a, const Vector& b) {
    const bool ua = upper(a);
    const bool ub = upper(b);
    if (ua != ub) return ua;
    return (a[0] * b[1] - a[1] * b[0]).sign() > 0;
  });
  for (auto& v : rel) v += c;
  return rel;
}

bool polygon_facet_balance(const VPolytope& polygon) {
  const auto ring = polygon_boundary(polygon);
  Vector total(2);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vector edge = ring[(i + 1) % ring.size()] - ring[i];
    // (e_y, -e_x): the outer normal scaled by the edge length for CCW order.
    total += Vector{edge[1], -edge[0]};
  }
  return total.is_zero();
}

SymmetryResult is_centrally_symmetric(const VPolytope& body) {
  const VPolytope k = body.canonical();
  const Vector c = centroid(k);
  std::vector<Vector> reflected;
  for (const auto& v : k.vertices()) reflected.push_back(c * Rational(2) - v);
  std::sort(reflected.begin(), reflected.end());
  if (reflected == k.vertices()) return {true, c};
  return {false, std::nullopt};
}

bool same_body(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim()) return false;
  return a.canonical().vertices() == b.canonical().vertices();
}

}  // namespace minkradii
