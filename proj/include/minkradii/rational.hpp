#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "minkradii/error.hpp"

namespace minkradii {

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading sign; rejects decimals and
  /// exponents so that no floating-point value can leak into a computation.
  static Rational parse(std::string_view text);

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  /// this −= a·b without allocating a temporary per call (simplex hot loop).
  Rational& sub_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Fixed-dimension point/direction with exact coordinates.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static Vector unit(std::size_t dim, std::size_t k);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b) = default;
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.str(); }

 private:
  std::vector<Rational> c_;
};

Rational dot(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Rows must all have the same length.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector operator*(const Vector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Outcome of an exact linear solve. For `Underdetermined`, `solution` is one
/// particular solution and `witness` a nonzero kernel vector; for
/// `NoSolution`, `witness` is a left vector y with yᵀA = 0 and yᵀb ≠ 0.
struct LinearSolution {
  enum class Kind { Unique, NoSolution, Underdetermined };
  Kind kind = Kind::NoSolution;
  Vector solution;
  Vector witness;
};

LinearSolution solve_linear(const Matrix& a, const Vector& b);
Rational det(const Matrix& a);
std::size_t rank(const Matrix& a);

}  // namespace minkradii
