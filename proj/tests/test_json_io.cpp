#include <functional>

#include "doctest.h"
#include "minkradii/json_io.hpp"
#include "support.hpp"

using namespace minkradii;
using namespace minkradii::test;
using json_io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("rational encoding") {
  CHECK(json_io::to_json(Q("-7/3")) == Json("-7/3"));
  CHECK(json_io::rational_from_json(Json("4/6")) == Q("2/3"));
  CHECK(json_io::rational_from_json(Json(5)) == Q("5"));
  CHECK(json_io::rational_from_json(Json(-2)) == Q("-2"));
  CHECK(kind_of([] { json_io::rational_from_json(Json(0.5)); }) == ErrorKind::Parse);
  CHECK(kind_of([] { json_io::rational_from_json(Json("1/0")); }) != ErrorKind::Parse);
  CHECK(kind_of([] { json_io::parse("{\"dim\": 2,"); }) == ErrorKind::Parse);
}

TEST_CASE("body round trip") {
  const auto s = triangle_s();
  CHECK(json_io::body_from_json(json_io::parse(json_io::to_json(s).dump())) == s);

  // An H-representation reads back as its vertex set.
  const Json h = json_io::parse(R"({"dim": 2, "halfspaces": [
      {"normal": ["1", "0"], "offset": "1"}, {"normal": ["-1", "0"], "offset": "1"},
      {"normal": ["0", "1"], "offset": "1"}, {"normal": ["0", "-1"], "offset": "1"}]})");
  CHECK(json_io::body_from_json(h) == square());
  CHECK(json_io::hpolytope_from_json(json_io::to_json(json_io::hpolytope_from_json(h))).halfspaces().size() == 4);

  CHECK(kind_of([] { json_io::body_from_json(json_io::parse(R"({"vertices": [["0", "0"]]})")); }) == ErrorKind::Parse);
  CHECK_THROWS_AS(json_io::body_from_json(json_io::parse(R"({"dim": 2, "vertices": [["0", "0"], ["1"]]})")), Error);
  CHECK_THROWS_AS(json_io::body_from_json(json_io::parse(R"({"dim": 2, "vertices": [[0.5, 0], [1, 0], [0, 1]]})")),
                  Error);
}

TEST_CASE("certificate survives serialization") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + i % 2;
    const auto k = random_vpolytope(n, n + 1 + rng.below(4), 6, rng);
    const auto c = random_vpolytope(n, n + 1 + rng.below(4), 6, rng);
    const Extraction ex = extract(k, c);
    REQUIRE(validate(k, ex.container, ex.certificate));
    const auto back = json_io::certificate_from_json(json_io::parse(json_io::to_json(ex.certificate).dump()));
    CHECK(back.contacts == ex.certificate.contacts);
    CHECK(back.normals == ex.certificate.normals);
    CHECK(back.weights == ex.certificate.weights);
    CHECK(validate(k, ex.container, back));
  }
}

TEST_CASE("example pair round trip") {
  for (const auto& pair : {sandwich_pair(3, 2, 1, Sandwich::Outer), complete_nonconcentric_pair(3),
                           triangle_blend_pair(Q("1/3"))}) {
    const auto back = json_io::example_from_json(json_io::parse(json_io::to_json(pair).dump()));
    CHECK(back.family == pair.family);
    CHECK(back.simplex == pair.simplex);
    CHECK(back.gauge == pair.gauge);
    CHECK(back.parameters == pair.parameters);
    CHECK(back.point == pair.point);
  }
  CHECK_THROWS_AS(json_io::example_from_json(json_io::parse(R"({"family": "nope"})")), Error);
}

TEST_CASE("reports are deterministic") {
  PairMetrics m(square(), triangle_s());
  const auto a = json_io::to_json(eval_chain(ChainId::GeneralizedChain, m)).dump();
  PairMetrics again(square(), triangle_s());
  CHECK(json_io::to_json(eval_chain(ChainId::GeneralizedChain, again)).dump() == a);
  CHECK(a.find('.') == std::string::npos);
}
