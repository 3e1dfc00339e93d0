#include "minkradii/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minkradii {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::MalformedProgram: return "malformed-program";
    case ErrorKind::InvalidBody: return "invalid-body";
    case ErrorKind::DegenerateSimplex: return "degenerate-simplex";
    case ErrorKind::UnboundedInput: return "unbounded-input";
    case ErrorKind::EmptyPolytope: return "empty-polytope";
    case ErrorKind::ScaleGuardExceeded: return "scale-guard-exceeded";
    case ErrorKind::ZeroDirection: return "zero-direction";
    case ErrorKind::InfiniteRadius: return "infinite-radius";
    case ErrorKind::SymmetricGaugeRequired: return "symmetric-gauge-required";
    case ErrorKind::NotCentered: return "not-centered";
    case ErrorKind::NotPlanar: return "not-planar";
    case ErrorKind::NotATriangle: return "not-a-triangle";
    case ErrorKind::OriginNotInGauge: return "origin-not-in-gauge";
    case ErrorKind::DegeneratePolygon: return "degenerate-polygon";
    case ErrorKind::DegenerateBody: return "degenerate-body";
    case ErrorKind::NoSuchPoint: return "no-such-point";
    case ErrorKind::ParameterViolation: return "parameter-violation";
    case ErrorKind::ExhaustedRedraws: return "exhausted-redraws";
    case ErrorKind::DegenerateDual: return "degenerate-dual";
    case ErrorKind::CompletenessUndecidable: return "completeness-undecidable";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Parse, "not an exact rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------

Vector Vector::unit(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

// ---------------------------------------------------------------------------

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(std::vector<Rational>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                      a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.dim() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& t, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < t.size(); ++c) {
    std::size_t p = r;
    while (p < t.size() && t[p][c].is_zero()) ++p;
    if (p == t.size()) continue;
    std::swap(t[p], t[r]);
    const Rational inv = Rational(1) / t[r][c];
    for (auto& x : t[r]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "solve_linear: rows != |b|");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // [A | b | I] so that a left witness can be read off for inconsistent rows.
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + 1 + m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n] = b[i];
    t[i][n + 1 + i] = 1;
  }
  const auto pivots = row_reduce(t, n);
  LinearSolution out;
  for (std::size_t i = pivots.size(); i < m; ++i) {
    if (!t[i][n].is_zero()) {
      out.kind = LinearSolution::Kind::NoSolution;
      out.witness = Vector(std::vector<Rational>(t[i].begin() + static_cast<std::ptrdiff_t>(n + 1), t[i].end()));
      return out;
    }
  }
  out.solution = Vector(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) out.solution[pivots[k]] = t[k][n];
  if (pivots.size() == n) {
    out.kind = LinearSolution::Kind::Unique;
    return out;
  }
  out.kind = LinearSolution::Kind::Underdetermined;
  std::size_t free_col = 0;
  for (std::size_t k = 0; free_col < n; ++free_col) {
    if (k < pivots.size() && pivots[k] == free_col) {
      ++k;
      continue;
    }
    break;
  }
  out.witness = Vector(n);
  out.witness[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) out.witness[pivots[k]] = -t[k][free_col];
  return out;
}

Rational det(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "det of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
  }
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && t[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(t[p], t[c]);
      d = -d;
    }
    d *= t[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (t[i][c].is_zero()) continue;
      const Rational f = t[i][c] / t[c][c];
      for (std::size_t j = c; j < n; ++j) t[i][j] -= f * t[c][j];
    }
  }
  return d;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::vector<Rational>> t(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t[i][j] = a(i, j);
  }
  return row_reduce(t, a.cols()).size();
}

}  // namespace minkradii
