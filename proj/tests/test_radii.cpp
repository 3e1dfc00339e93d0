#include "doctest.h"
#include "minkradii/constructions.hpp"
#include "minkradii/radii.hpp"
#include "support.hpp"

using namespace minkradii;
using namespace minkradii::test;

namespace {

// Random integer matrix with determinant ±1 built from elementary shears.
Matrix unimodular(std::size_t n, Rng& rng) {
  Matrix a = Matrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n);
    if (i == j) j = (j + 1) % n;
    const long k = rng.between(-2, 2);
    for (std::size_t c = 0; c < n; ++c) a(i, c) += Rational(k) * a(j, c);
  }
  return a;
}

Vector random_vector(std::size_t n, Rng& rng, long bound = 5) {
  Vector v(n);
  for (std::size_t d = 0; d < n; ++d) v[d] = rng.rational(bound);
  return v;
}

}  // namespace

TEST_CASE("circumradius examples") {
  const auto s = triangle_s();
  const auto self = circumradius(s, s);
  REQUIRE(self);
  CHECK(self->value == Rational(1));
  CHECK(self->translation.is_zero());
  CHECK(circumradius_value(negate(s), s) == Rational(2));

  const auto sq = circumradius(square(), s);
  REQUIRE(sq);
  CHECK(sq->value == Q("8/3"));
  CHECK(sq->translation == Vector{Q("-1/3"), Q("-1/3")});
  CHECK(contained_after_translation(square(), s, sq->value, sq->translation));
  CHECK_FALSE(contained_after_translation(square(), s, Q("8/3") - Q("1/100"), sq->translation));

  // A segment is never inside a translate of a dilate of a different line.
  const auto seg = body({{0, 0}, {1, 0}});
  const auto other = body({{0, 1}, {0, 2}});
  CHECK_FALSE(circumradius(seg, other).has_value());
  CHECK_THROWS_AS(circumradius_value(seg, other), Error);
  CHECK_THROWS_AS(circumradius(seg, body({{0, 0, 0}, {1, 1, 1}})), Error);
}

TEST_CASE("circumradius agrees with the simplex-gauge closed form") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, 3 + rng.below(6), 8, rng);
    const auto c = random_simplex(n, 8, rng);
    const auto r = circumradius(k, c);
    REQUIRE(r);
    CHECK(r->value == simplex_gauge_circumradius(k, simplex_hrep(c)));
    CHECK(contained_after_translation(k, c, r->value, r->translation));
    // inradius of a simplex body through the same closed form: r(S, C) = 1/R(C, S)
    const auto in = inradius(c, k);
    CHECK(in.value == Rational(1) / simplex_gauge_circumradius(k, simplex_hrep(c)));
  }
}

TEST_CASE("inradius examples and the direct program") {
  const auto s = triangle_s();
  CHECK(inradius(s, s).value == Rational(1));
  CHECK(inradius(square(), s).value == Rational(1));
  const auto in = inradius(square(), s);
  CHECK(contains_translated_dilate(square(), s, in.value, in.translation));

  const auto ex = sandwich_pair(2, 1, Q("1/2"), Sandwich::Inner);
  CHECK(inradius(ex.simplex, ex.gauge).value == Q("1/2"));
  CHECK(inradius_direct(ex.simplex, ex.gauge).value == Q("1/2"));

  Rng rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, 4 + rng.below(3), 6, rng);
    const auto c = random_vpolytope(n, 4 + rng.below(3), 6, rng);
    const auto a = inradius(k, c);
    const auto b = inradius_direct(k, c);
    CHECK(a.value == b.value);
    CHECK(contains_translated_dilate(k, c, a.value, a.translation));
    CHECK(contains_translated_dilate(k, c, b.value, b.translation));
    CHECK(a.value * circumradius_value(c, k) == Rational(1));
  }
}

TEST_CASE("symmetric gauge norm") {
  const auto s = triangle_s();
  CHECK(sym_gauge_norm(Vi({0, 0}), s) == Rational(0));
  CHECK(sym_gauge_norm(Vi({2, -2}), s) == Rational(4));
  CHECK(sym_gauge_norm(Vi({-2, 2}), s) == Rational(4));
  CHECK_FALSE(sym_gauge_norm(Vi({1, 1}), body({{0, 0}, {1, 0}})).has_value());
  CHECK_THROWS_AS(sym_gauge_norm(Vi({1, 1, 1}), s), Error);

  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto c = random_vpolytope(n, 4 + rng.below(4), 6, rng);
    const Vector z = random_vector(n, rng);
    if (z.is_zero()) continue;
    const auto norm = sym_gauge_norm(z, c);
    REQUIRE(norm);
    CHECK(*norm == *sym_gauge_norm(-z, c));
    CHECK(*norm == Rational(2) * circumradius_value(VPolytope(n, {Vector(n), z}), c));
  }
}

TEST_CASE("planar norm against a facet oracle") {
  // In the plane the facets of C − C come from consecutive boundary vertices;
  // ‖z‖ = 2·max_f a_f·z / h(C−C, a_f).
  Rng rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    const auto c = random_vpolytope(2, 3 + rng.below(5), 7, rng);
    const auto ring = polygon_boundary(difference_body(c));
    const Vector z = random_vector(2, rng);
    Rational best;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vector e = ring[(i + 1) % ring.size()] - ring[i];
      const Vector a{e[1], -e[0]};
      best = max(best, dot(a, z) / dot(a, ring[i]));
    }
    CHECK(*sym_gauge_norm(z, c) == Rational(2) * best);
  }
}

TEST_CASE("diameter") {
  const auto d = diameter(square(), triangle_s());
  CHECK(d.value == Rational(4));
  const auto sq = square().canonical();
  REQUIRE(d.attaining.size() == 2);
  CHECK(sq[d.attaining[0]] == Vi({-1, 1}));
  CHECK(sq[d.attaining[1]] == Vi({1, -1}));
  const auto ex = sandwich_pair(2, 1, Q("1/2"), Sandwich::Inner);
  CHECK(diameter(ex.simplex, ex.gauge).value == Q("4/3"));
  CHECK(diameter(negate(ex.simplex), ex.gauge).value == Q("4/3"));
  CHECK(diameter(square(), square()).value == Rational(2));
}

TEST_CASE("asymmetry and Minkowski centers") {
  const auto sq = asymmetry(square());
  CHECK(sq.s == Rational(1));
  CHECK(sq.center.is_zero());
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = asymmetry(standard_centered_simplex(n));
    CHECK(a.s == Rational(static_cast<long>(n)));
    CHECK(a.center.is_zero());
  }
  CHECK(asymmetry(body({{0, 0}, {3, 0}, {0, 3}})).s == Rational(2));
  CHECK(is_minkowski_center(standard_centered_simplex(3), Vector(3)));
  const auto s = triangle_s();
  CHECK_FALSE(is_minkowski_center(s, Vi({1, 0})));
  const auto shifted = body({{1, 1}, {4, 1}, {1, 4}});
  CHECK(is_minkowski_center(shifted, centroid(shifted)));

  Rng rng(113);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, n + 1 + rng.below(5), 6, rng);
    const auto a = asymmetry(k);
    CHECK(a.s >= Rational(1));
    CHECK(a.s <= Rational(static_cast<long>(n)));
    CHECK(is_minkowski_center(k, a.center, a.s));
    CHECK(asymmetry(negate(k)).s == a.s);
  }
}

TEST_CASE("breadth") {
  const auto sq = square();
  CHECK(breadth(sq, sq, Vi({1, 0})) == Rational(2));
  CHECK(breadth(sq, sq, Vi({0, -3})) == Rational(2));
  CHECK_THROWS_AS(breadth(sq, sq, Vi({0, 0})), Error);
  CHECK_THROWS_AS(breadth(sq, body({{0, 0}, {1, 0}}), Vi({0, 1})), Error);

  Rng rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, 5, 6, rng);
    const auto c = random_vpolytope(n, 5, 6, rng);
    const Vector s = random_vector(n, rng);
    if (s.is_zero()) continue;
    CHECK(breadth(k, c, s) == breadth(difference_body(k), difference_body(c), s));
    CHECK(breadth(k, k, s) <= Rational(2));
    const auto d = diameter(k, c).value;
    CHECK(breadth(k, c, s) <= d);
  }
  // The diameter is attained by the breadth in a facet direction of K − K in
  // the plane (supremum over directions is a max over facet normals there).
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = random_vpolytope(2, 5, 6, rng);
    const auto c = random_vpolytope(2, 5, 6, rng);
    const auto ring = polygon_boundary(difference_body(c));
    Rational best;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vector e = ring[(i + 1) % ring.size()] - ring[i];
      best = max(best, breadth(k, c, Vector{e[1], -e[0]}));
    }
    CHECK(best == diameter(k, c).value);
  }
}

TEST_CASE("Jung ratio and constant width") {
  const auto s = triangle_s();
  const auto ss = difference_body(s);
  CHECK(circumradius_value(s, ss) == Q("2/3"));
  CHECK(diameter(s, ss).value == Rational(1));
  CHECK(jung_ratio(s, ss) == Q("2/3"));
  const auto ex = sandwich_pair(2, 1, Q("1/2"), Sandwich::Inner);
  CHECK(jung_ratio(negate(ex.simplex), ex.gauge) == Q("3/4"));
  CHECK(jung_ratio(body({{0, 0}, {2, 1}}), s) == Q("1/2"));

  CHECK(is_constant_width(square(), square()));
  CHECK_FALSE(is_constant_width(s, square()));
  Rng rng(131);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_nonsymmetric_vpolytope(2 + trial % 2, 5, 6, rng);
    CHECK(is_constant_width(difference_body(c), c));
  }
}

TEST_CASE("radii invariants on random pairs") {
  Rng rng(137);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, n + 1 + rng.below(4), 6, rng);
    const auto c = random_vpolytope(n, n + 1 + rng.below(4), 6, rng);
    const Rational big_r = circumradius_value(k, c);
    const Rational small_r = inradius(k, c).value;
    const Rational d = diameter(k, c).value;
    CAPTURE(trial);

    CHECK(small_r * circumradius_value(c, k) == Rational(1));
    CHECK(d == Rational(2) * diameter(k, difference_body(c)).value);
    CHECK(d == diameter(negate(k), c).value);

    const Rational rho = Rational(1) + rng.rational(3) * rng.rational(3);
    if (rho.sign() > 0) CHECK(circumradius_value(scale(k, rho), c) == rho * big_r);

    const Vector t1 = random_vector(n, rng), t2 = random_vector(n, rng);
    CHECK(circumradius_value(translate(k, t1), translate(c, t2)) == big_r);
    CHECK(inradius(translate(k, t1), translate(c, t2)).value == small_r);
    CHECK(diameter(translate(k, t1), translate(c, t2)).value == d);
    CHECK(asymmetry(translate(k, t1)).s == asymmetry(k).s);

    const Matrix a = unimodular(n, rng);
    CHECK(circumradius_value(map_body(k, a, t1), map_body(c, a, t2)) == big_r);

    // monotonicity: a sub-body obtained by dropping a vertex (if still a body)
    std::vector<Vector> sub(k.vertices().begin() + 1, k.vertices().end());
    VPolytope inner(n, sub);
    if (is_full_dimensional(inner)) {
      CHECK(circumradius_value(inner, c) <= big_r);
      CHECK(inradius(inner, c).value <= small_r);
      CHECK(diameter(inner, c).value <= d);
    }
  }
}
