#include "doctest.h"
#include "minkradii/constructions.hpp"
#include "minkradii/radii.hpp"
#include "support.hpp"

using namespace minkradii;
using namespace minkradii::test;

TEST_CASE("splitmix64 reference stream") {
  // Published reference outputs for seed 0.
  Rng rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("bounded draws") {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    CHECK(rng.below(7) < 7);
    const long b = rng.between(-3, 4);
    CHECK((b >= -3 && b <= 4));
    const Rational q = rng.rational(5);
    CHECK((q.numerator() <= 5 && q.numerator() >= -5));
    CHECK((q.denominator() <= 5));
  }
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("standard centered simplex") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto s = standard_centered_simplex(n);
    CHECK(is_simplex(s));
    CHECK(centroid(s).is_zero());
    const auto a = asymmetry(s);
    CHECK(a.s == Rational(static_cast<long>(n)));
    CHECK(a.center.is_zero());
  }
  CHECK_THROWS_AS(standard_centered_simplex(1), Error);
}

TEST_CASE("sandwich pairs") {
  for (std::size_t n : {2u, 3u}) {
    const Rational nn(static_cast<long>(n));
    const auto inner = sandwich_pair(n, 3, 1, Sandwich::Inner);
    const auto outer = sandwich_pair(n, 3, 1, Sandwich::Outer);
    CHECK(inner.simplex == standard_centered_simplex(n));
    CHECK(inner.family == Family::SandwichInner);
    CHECK(outer.family == Family::SandwichOuter);
    CHECK(contains(outer.gauge, inner.gauge));
    // The outer end is exactly (λ+nμ)S ∩ (nλ+μ)(−S): its support in a facet
    // direction a of S is min{(λ+nμ)h(S,a), (nλ+μ)h(−S,a)}.
    const HPolytope hrep = simplex_hrep(inner.simplex);
    for (const auto& f : hrep.halfspaces()) {
      const Rational expect = min((3 + nn) * support_value(inner.simplex, f.normal),
                                  (3 * nn + 1) * support_value(negate(inner.simplex), f.normal));
      CHECK(support_value(outer.gauge, f.normal) == expect);
    }
  }
  CHECK(sandwich_pair(2, 2, 0, Sandwich::Inner).gauge == scale(standard_centered_simplex(2), 2));
  CHECK(sandwich_pair(2, 1, 1, Sandwich::Outer).gauge.size() == 6);
  CHECK_THROWS_AS(sandwich_pair(2, 1, 2, Sandwich::Inner), Error);
  CHECK_THROWS_AS(sandwich_pair(2, 0, 0, Sandwich::Inner), Error);
  CHECK_THROWS_AS(sandwich_pair(2, 1, -1, Sandwich::Inner), Error);
}

TEST_CASE("complete non-concentric pair") {
  const auto pair = complete_nonconcentric_pair(3);
  REQUIRE(pair.point);
  const auto diff = difference_body(pair.simplex);
  CHECK_FALSE(contains_point(diff, *pair.point));
  CHECK(contains(pair.gauge, diff));
  CHECK(contains_point(pair.gauge, *pair.point));
  CHECK(contains(scale(pair.simplex, 4), pair.gauge));
  CHECK(contains(scale(negate(pair.simplex), 4), pair.gauge));

  // Every vertex of 3(S ∩ −S) already lies in the hexagon S − S.
  try {
    complete_nonconcentric_pair(2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchPoint);
  }
  const auto explicit_p = complete_nonconcentric_pair(3, *pair.point);
  CHECK(explicit_p.gauge == pair.gauge);
  CHECK_THROWS_AS(complete_nonconcentric_pair(3, Vi({0, 0, 0})), Error);
  CHECK_THROWS_AS(complete_nonconcentric_pair(3, Vi({0, 0})), Error);
}

TEST_CASE("triangle blend pairs") {
  const auto s = standard_centered_simplex(2);
  CHECK(triangle_blend_pair(1).gauge == s);
  CHECK(triangle_blend_pair(0).gauge == negate(s).canonical());
  const auto half = triangle_blend_pair(Q("1/2"));
  CHECK(half.gauge == scale(difference_body(s), Q("1/2")));
  CHECK(half.family == Family::TriangleBlend);
  CHECK(difference_body(triangle_blend_pair(Q("2/7")).gauge) == difference_body(s));
  CHECK_THROWS_AS(triangle_blend_pair(2), Error);
}

TEST_CASE("random bodies") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 2;
    const auto k = random_vpolytope(n, n + 1 + rng.below(5), 6, rng);
    CHECK(k.is_canonical());
    CHECK(is_full_dimensional(k));
    CHECK_FALSE(is_centrally_symmetric(random_nonsymmetric_vpolytope(n, 5, 6, rng)).symmetric);
    CHECK(is_simplex(random_simplex(n, 6, rng)));
  }
  CHECK(random_vpolytope(2, 6, 4, 3u) == random_vpolytope(2, 6, 4, 3u));
  CHECK_THROWS_AS(random_vpolytope(3, 3, 5, rng), Error);
}
