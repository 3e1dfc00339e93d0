#include "minkradii/radii.hpp"

namespace minkradii {

namespace {

using Term = lp::Builder::Term;

void require_same_dim(const VPolytope& k, const VPolytope& c, const char* what) {
  if (k.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

CircumradiusProgram circumradius_program(const VPolytope& k_in, const VPolytope& c_in) {
  require_same_dim(k_in, c_in, "circumradius");
  const VPolytope k = k_in.canonical();
  const VPolytope c = c_in.canonical();
  const std::size_t n = k.dim();
  CircumradiusProgram out;
  out.dim = n;
  out.body_size = k.size();
  out.gauge_size = c.size();

  lp::Builder b;
  out.translation_col = b.add_vars(n, lp::VarSign::Free);
  out.lambda_col = b.add_var(lp::VarSign::NonNegative, Rational(1));
  out.nu_col = b.add_vars(k.size() * c.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Term> row{{out.translation_col + d, Rational(1)}};
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!c[j][d].is_zero()) row.emplace_back(out.nu_col + i * c.size() + j, c[j][d]);
      }
      b.add_eq(std::move(row), k[i][d]);
    }
    std::vector<Term> sum{{out.lambda_col, Rational(-1)}};
    for (std::size_t j = 0; j < c.size(); ++j) sum.emplace_back(out.nu_col + i * c.size() + j, 1);
    b.add_eq(std::move(sum), 0);
  }
  out.program = b.build();
  return out;
}

std::optional<RadiiResult> circumradius(const VPolytope& k, const VPolytope& c, lp::Outcome* outcome,
                                        CircumradiusProgram* program) {
  CircumradiusProgram prog = circumradius_program(k, c);
  lp::Outcome res = lp::solve(prog.program);
  if (res.status == lp::Status::Unbounded) {
    throw Error(ErrorKind::MalformedProgram, "circumradius program cannot be unbounded");
  }
  std::optional<RadiiResult> out;
  if (res.status == lp::Status::Optimal) {
    RadiiResult r;
    r.value = res.primal[prog.lambda_col];
    r.translation = Vector(prog.dim);
    for (std::size_t d = 0; d < prog.dim; ++d) r.translation[d] = res.primal[prog.translation_col + d];
    for (std::size_t i = 0; i < prog.body_size; ++i) {
      bool active = false;
      for (std::size_t d = 0; d < prog.dim; ++d) active = active || !res.dual[prog.point_row(i, d)].is_zero();
      if (active) r.attaining.push_back(i);
    }
    out = std::move(r);
  }
  if (outcome) *outcome = std::move(res);
  if (program) *program = std::move(prog);
  return out;
}

std::optional<RadiiResult> circumradius(const VPolytope& k, const VPolytope& c) {
  return circumradius(k, c, nullptr, nullptr);
}

Rational circumradius_value(const VPolytope& k, const VPolytope& c) {
  auto r = circumradius(k, c);
  if (!r) throw Error(ErrorKind::InfiniteRadius, "circumradius is infinite");
  return r->value;
}

RadiiResult inradius(const VPolytope& k, const VPolytope& c) {
  require_same_dim(k, c, "inradius");
  // C ⊂ t' + R·K  ⟺  (1/R)·C − t'/R ⊂ K. The reciprocal program has the same
  // size as the direct one but pivots several times faster in practice.
  const auto outer = circumradius(c, k);
  RadiiResult r;
  if (!outer) {
    // K is flatter than C: only the zero dilate fits.
    r.value = 0;
    r.translation = k.canonical()[0];
    return r;
  }
  r.value = Rational(1) / outer->value;
  r.translation = outer->translation * -r.value;
  r.attaining = outer->attaining;
  return r;
}

RadiiResult inradius_direct(const VPolytope& k_in, const VPolytope& c_in) {
  require_same_dim(k_in, c_in, "inradius");
  const VPolytope k = k_in.canonical();
  const VPolytope c = c_in.canonical();
  const std::size_t n = k.dim();
  lp::Builder b;
  const std::size_t t = b.add_vars(n, lp::VarSign::Free);
  const std::size_t lambda = b.add_var(lp::VarSign::NonNegative, Rational(-1));
  const std::size_t alpha = b.add_vars(c.size() * k.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Term> row{{t + d, Rational(1)}};
      if (!c[j][d].is_zero()) row.emplace_back(lambda, c[j][d]);
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (!k[i][d].is_zero()) row.emplace_back(alpha + j * k.size() + i, -k[i][d]);
      }
      b.add_eq(std::move(row), 0);
    }
    std::vector<Term> sum;
    for (std::size_t i = 0; i < k.size(); ++i) sum.emplace_back(alpha + j * k.size() + i, 1);
    b.add_eq(std::move(sum), 1);
  }
  const auto res = lp::solve(b.build());
  if (res.status != lp::Status::Optimal) {
    throw Error(ErrorKind::MalformedProgram, std::string("inradius program ") + lp::to_string(res.status));
  }
  RadiiResult r;
  r.value = res.primal[lambda];
  r.translation = Vector(n);
  for (std::size_t d = 0; d < n; ++d) r.translation[d] = res.primal[t + d];
  for (std::size_t j = 0; j < c.size(); ++j) {
    bool active = false;
    for (std::size_t d = 0; d < n; ++d) active = active || !res.dual[j * (n + 1) + d].is_zero();
    if (active) r.attaining.push_back(j);
  }
  return r;
}

bool contained_after_translation(const VPolytope& k, const VPolytope& c, const Rational& rho, const Vector& t) {
  require_same_dim(k, c, "containment check");
  if (rho.sign() < 0) return false;
  if (rho.is_zero()) {
    for (const auto& v : k.vertices()) {
      if (v != t) return false;
    }
    return true;
  }
  const Rational inv = Rational(1) / rho;
  for (const auto& v : k.vertices()) {
    if (!contains_point(c, (v - t) * inv)) return false;
  }
  return true;
}

bool contains_translated_dilate(const VPolytope& k, const VPolytope& c, const Rational& rho, const Vector& t) {
  require_same_dim(k, c, "containment check");
  if (rho.sign() < 0) return false;
  for (const auto& w : c.vertices()) {
    if (!contains_point(k, w * rho + t)) return false;
  }
  return true;
}

std::optional<Rational> sym_gauge_norm(const Vector& z, const VPolytope& c_in) {
  if (z.dim() != c_in.dim()) throw Error(ErrorKind::DimensionMismatch, "sym_gauge_norm");
  if (z.is_zero()) return Rational(0);
  const VPolytope c = c_in.canonical();
  const std::size_t n = c.dim();
  lp::Builder b;
  const std::size_t rho = b.add_var(lp::VarSign::NonNegative, Rational(1));
  const std::size_t plus = b.add_vars(c.size());
  const std::size_t minus = b.add_vars(c.size());
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<Term> row;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j][d].is_zero()) continue;
      row.emplace_back(plus + j, c[j][d]);
      row.emplace_back(minus + j, -c[j][d]);
    }
    b.add_eq(std::move(row), z[d]);
  }
  const Rational half(1, 2);
  for (std::size_t block : {plus, minus}) {
    std::vector<Term> sum{{rho, -half}};
    for (std::size_t j = 0; j < c.size(); ++j) sum.emplace_back(block + j, 1);
    b.add_eq(std::move(sum), 0);
  }
  const auto res = lp::solve(b.build());
  if (res.status != lp::Status::Optimal) return std::nullopt;
  return res.primal[rho];
}

RadiiResult diameter(const VPolytope& k_in, const VPolytope& c) {
  if (k_in.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "diameter");
  const VPolytope k = k_in.canonical();
  RadiiResult best;
  best.translation = Vector(k.dim());
  bool have = false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const auto norm = sym_gauge_norm(k[j] - k[i], c);
      if (!norm) throw Error(ErrorKind::InfiniteRadius, "diameter is infinite");
      if (!have || *norm > best.value) {
        best.value = *norm;
        best.attaining = {i, j};
        have = true;
      }
    }
  }
  return best;
}

Asymmetry asymmetry(const VPolytope& k_in) {
  const VPolytope k = k_in.canonical();
  const auto r = circumradius(negate(k), k);
  if (!r) throw Error(ErrorKind::InfiniteRadius, "asymmetry of a body is always finite");
  Asymmetry a;
  a.s = r->value;
  a.center = r->translation * (Rational(-1) / (Rational(1) + a.s));
  return a;
}

bool is_minkowski_center(const VPolytope& k, const Vector& c, const Rational& s) {
  if (c.dim() != k.dim()) throw Error(ErrorKind::DimensionMismatch, "is_minkowski_center");
  // −(K − c) ⊂ s(K − c)  ⟺  (−v + (1+s)c)/s ∈ K for every vertex v.
  const Rational inv = Rational(1) / s;
  const Vector shift = c * (Rational(1) + s);
  for (const auto& v : k.vertices()) {
    if (!contains_point(k, (shift - v) * inv)) return false;
  }
  return true;
}

bool is_minkowski_center(const VPolytope& k, const Vector& c) {
  return is_minkowski_center(k, c, asymmetry(k).s);
}

Rational breadth(const VPolytope& k, const VPolytope& c, const Vector& s) {
  if (s.dim() != k.dim() || c.dim() != k.dim()) throw Error(ErrorKind::DimensionMismatch, "breadth");
  if (s.is_zero()) throw Error(ErrorKind::ZeroDirection, "breadth needs a nonzero direction");
  const Vector ms = -s;
  const Rational body_width = support_value(k, s) + support_value(k, ms);
  const Rational gauge_width = support_value(c, s) + support_value(c, ms);
  if (gauge_width.is_zero()) throw Error(ErrorKind::InfiniteRadius, "gauge has zero width in this direction");
  return Rational(2) * body_width / gauge_width;
}

Rational jung_ratio(const VPolytope& k, const VPolytope& c) {
  return circumradius_value(k, c) / diameter(k, c).value;
}

bool is_constant_width(const VPolytope& k, const VPolytope& c) {
  const Rational d = diameter(k, c).value;
  if (d.is_zero()) return false;
  return same_body(difference_body(k), scale(difference_body(c), d / Rational(2)));
}

bool contained_up_to_translation(const VPolytope& inner, const VPolytope& outer) {
  const auto r = circumradius(inner, outer);
  return r && r->value <= Rational(1);
}

}  // namespace minkradii
