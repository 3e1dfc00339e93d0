#include <algorithm>

#include "doctest.h"
#include "minkradii/certificates.hpp"
#include "minkradii/constructions.hpp"
#include "minkradii/radii.hpp"
#include "support.hpp"

using namespace minkradii;
using namespace minkradii::test;

namespace {

// Positive multiple test: a = ρ·b with ρ > 0.
bool same_ray(const Vector& a, const Vector& b) {
  Rational ratio;
  bool have = false;
  for (std::size_t d = 0; d < a.dim(); ++d) {
    if (a[d].is_zero() != b[d].is_zero()) return false;
    if (a[d].is_zero()) continue;
    const Rational q = a[d] / b[d];
    if (have && q != ratio) return false;
    ratio = q;
    have = true;
  }
  return have && ratio.sign() > 0;
}

}  // namespace

TEST_CASE("hand-built certificates") {
  const auto sq = square();
  ContainmentCertificate antipodal{{Vi({1, 1}), Vi({-1, -1})}, {Vi({1, 0}), Vi({-1, 0})}, {Q("1/2"), Q("1/2")}};
  CHECK(validate(sq, sq, antipodal));

  ContainmentCertificate one_sided{{Vi({1, 1}), Vi({1, -1})}, {Vi({1, 0}), Vi({1, 1})}, {Q("1/2"), Q("1/2")}};
  CHECK_FALSE(validate(sq, sq, one_sided));

  auto bad_weights = antipodal;
  bad_weights.weights = {Q("1/3"), Q("2/3")};
  CHECK_FALSE(validate(sq, sq, bad_weights));
  auto zero_weight = antipodal;
  zero_weight.weights = {Rational(0), Rational(1)};
  CHECK_FALSE(validate(sq, sq, zero_weight));
  auto outside = antipodal;
  outside.contacts[0] = Vi({2, 1});
  CHECK_FALSE(validate(sq, sq, outside));
  auto interior = antipodal;
  interior.contacts[0] = Vi({0, 0});
  CHECK_FALSE(validate(sq, sq, interior));
  ContainmentCertificate too_many{{Vi({1, 1}), Vi({-1, -1}), Vi({1, -1}), Vi({-1, 1})},
                                  {Vi({1, 0}), Vi({-1, 0}), Vi({0, -1}), Vi({0, 1})},
                                  {Q("1/4"), Q("1/4"), Q("1/4"), Q("1/4")}};
  CHECK_FALSE(validate(sq, sq, too_many));
}

TEST_CASE("square in a scaled triangle") {
  const auto ex = extract(square(), triangle_s());
  CHECK(ex.radius == Q("8/3"));
  CHECK_FALSE(ex.perturbed);
  const auto& cert = ex.certificate;
  REQUIRE(cert.size() == 3);
  CHECK(validate(square(), ex.container, cert));
  std::vector<Vector> want{Vi({1, 1}), Vi({-2, 1}), Vi({1, -2})};
  for (const auto& a : cert.normals) {
    CHECK(std::any_of(want.begin(), want.end(), [&](const Vector& w) { return same_ray(a, w); }));
  }
  // The container is (8/3)S + (−1/3,−1/3); check it independently.
  CHECK(ex.container == translate(scale(triangle_s(), Q("8/3")), Vector{Q("-1/3"), Q("-1/3")}));
}

TEST_CASE("self containment and the hexagon gauge") {
  const auto s = triangle_s();
  const auto self = extract(s, s);
  CHECK(self.radius == Rational(1));
  CHECK(validate(s, self.container, self.certificate));
  CHECK(self.certificate.size() >= 2);

  const auto hex = extract(s, difference_body(s));
  CHECK(hex.radius == Q("2/3"));
  CHECK(validate(s, hex.container, hex.certificate));
  // Same certificate fails against a container that is too large.
  CHECK_FALSE(validate(s, scale(hex.container, 2), hex.certificate));
}

TEST_CASE("extracted certificates validate on random pairs") {
  Rng rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto k = random_vpolytope(n, n + 1 + rng.below(5), 6, rng);
    const auto c = random_vpolytope(n, n + 1 + rng.below(5), 6, rng);
    const auto ex = extract(k, c);
    CAPTURE(trial);
    CHECK(ex.radius == circumradius_value(k, c));
    CHECK(contains(ex.container, k));
    CHECK(validate(k, ex.container, ex.certificate));
    CHECK(ex.certificate.size() <= n + 1);
  }
  CHECK_THROWS_AS(extract(body({{0, 0}, {1, 0}}), body({{0, 0}, {0, 1}})), Error);
}
