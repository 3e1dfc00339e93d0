#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "minkradii/bodies.hpp"
#include "minkradii/rational.hpp"

namespace minkradii::test {

inline Rational Q(const char* text) { return Rational::parse(text); }

inline Vector V(std::initializer_list<const char*> coords) {
  std::vector<Rational> c;
  for (const char* x : coords) c.push_back(Rational::parse(x));
  return Vector(std::move(c));
}

inline Vector Vi(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long x : coords) c.emplace_back(x);
  return Vector(std::move(c));
}

inline VPolytope body(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<Vector> v;
  for (auto p : pts) v.push_back(Vi(p));
  return VPolytope(std::move(v));
}

/// conv{(1,0),(0,1),(−1,−1)}
inline VPolytope triangle_s() { return body({{1, 0}, {0, 1}, {-1, -1}}); }
inline VPolytope square() { return body({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}); }

}  // namespace minkradii::test

namespace minkradii::test {

inline VPolytope map_body(const VPolytope& k, const Matrix& a, const Vector& shift) {
  std::vector<Vector> pts;
  for (const auto& v : k.vertices()) pts.push_back(a * v + shift);
  return VPolytope(k.dim(), std::move(pts));
}

/// Closed form for a simplex gauge S with facets a_f·x ≤ b_f. The facet
/// normals admit a unique (up to scale) positive relation Σ w_f a_f = 0,
/// and all n+1 facet constraints can be made tight at once, so
/// R(K, S) = Σ w_f h(K, a_f) / Σ w_f b_f.
inline Rational simplex_gauge_circumradius(const VPolytope& k, const HPolytope& s) {
  const std::size_t n = s.dim();
  const auto& hs = s.halfspaces();
  std::vector<Rational> w(n + 1);
  for (std::size_t f = 0; f <= n; ++f) {
    Matrix m(n, n);
    for (std::size_t r = 0, rr = 0; r <= n; ++r) {
      if (r == f) continue;
      for (std::size_t c = 0; c < n; ++c) m(c, rr) = hs[r].normal[c];
      ++rr;
    }
    w[f] = f % 2 == 0 ? det(m) : -det(m);
  }
  if (w[0].sign() < 0) {
    for (auto& x : w) x = -x;
  }
  Rational num, den;
  for (std::size_t f = 0; f <= n; ++f) {
    Rational h = dot(hs[f].normal, k[0]);
    for (const auto& v : k.vertices()) h = max(h, dot(hs[f].normal, v));
    num += w[f] * h;
    den += w[f] * hs[f].offset;
  }
  return num / den;
}

}  // namespace minkradii::test
