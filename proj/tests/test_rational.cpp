#include <random>

#include "doctest.h"
#include "minkradii/rational.hpp"
#include "support.hpp"

using namespace minkradii;
using minkradii::test::Q;
using minkradii::test::Vi;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Q("3/6").denominator() == 2);
  CHECK(Q("4/5") / Q("2/5") == Rational(2));
  CHECK(Q("0/7").str() == "0");
  CHECK(Q("-0").str() == "0");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK_THROWS_AS(Q("1") / Q("0"), Error);
  try {
    (void)(Q("1") / Rational(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("rational parser rejects floating-point literals") {
  CHECK(Q("-12/8") == Rational(-3, 2));
  CHECK(Q("+7") == Rational(7));
  for (const char* bad : {"0.5", "1e3", "1/2.0", "", "/3", "3/", "abc", "1/-2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Q(bad), Error);
  }
  CHECK_THROWS_AS(Q("1/0"), Error);
}

TEST_CASE("field axioms hold on random rationals") {
  std::mt19937_64 gen(7);
  auto draw = [&] {
    const long num = static_cast<long>(gen() % 41) - 20;
    const long den = static_cast<long>(gen() % 20) + 1;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("solve_linear classifies systems") {
  SUBCASE("identity") {
    const auto sol = solve_linear(Matrix::identity(3), Vi({4, -2, 9}));
    REQUIRE(sol.kind == LinearSolution::Kind::Unique);
    CHECK(sol.solution == Vi({4, -2, 9}));
  }
  SUBCASE("symmetric 2x2") {
    const auto a = Matrix::from_rows({Vi({1, 1}), Vi({1, -1})});
    const auto sol = solve_linear(a, Vi({1, 0}));
    REQUIRE(sol.kind == LinearSolution::Kind::Unique);
    CHECK(sol.solution == Vector{Q("1/2"), Q("1/2")});
  }
  SUBCASE("singular consistent -> underdetermined witness") {
    const auto a = Matrix::from_rows({Vi({1, 2}), Vi({2, 4})});
    const auto sol = solve_linear(a, Vi({3, 6}));
    REQUIRE(sol.kind == LinearSolution::Kind::Underdetermined);
    CHECK(a * sol.solution == Vi({3, 6}));
    CHECK_FALSE(sol.witness.is_zero());
    CHECK((a * sol.witness).is_zero());
  }
  SUBCASE("singular inconsistent -> left witness") {
    const auto a = Matrix::from_rows({Vi({1, 2}), Vi({2, 4})});
    const auto sol = solve_linear(a, Vi({3, 5}));
    REQUIRE(sol.kind == LinearSolution::Kind::NoSolution);
    const Vector& y = sol.witness;
    CHECK(y[0] * a(0, 0) + y[1] * a(1, 0) == Rational(0));
    CHECK(y[0] * a(0, 1) + y[1] * a(1, 1) == Rational(0));
    CHECK_FALSE((y[0] * 3 + y[1] * 5).is_zero());
  }
  CHECK_THROWS_AS(solve_linear(Matrix::identity(2), Vi({1, 2, 3})), Error);
}

TEST_CASE("determinants") {
  CHECK(det(Matrix::identity(3)) == Rational(1));
  CHECK(det(Matrix::from_rows({Vi({1, 2, 3}), Vi({1, 2, 3}), Vi({0, 1, 5})})) == Rational(0));
  CHECK(det(Matrix::from_rows({Vi({1, 2}), Vi({3, 4})})) == Rational(-2));
  CHECK(det(Matrix::from_rows({Vi({0, 1}), Vi({1, 0})})) == Rational(-1));
  CHECK_THROWS_AS(det(Matrix(2, 3)), Error);
}

TEST_CASE("solve_linear round-trips random nonsingular systems") {
  std::mt19937_64 gen(11);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen() % 5;
    Matrix a(n, n);
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 7) + 1);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 5) + 1);
    }
    if (det(a).is_zero()) continue;
    const auto sol = solve_linear(a, a * x);
    REQUIRE(sol.kind == LinearSolution::Kind::Unique);
    CHECK(sol.solution == x);
    ++solved;
  }
  CHECK(solved > 80);
}
