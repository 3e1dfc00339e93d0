#include "minkradii/error.hpp"
#include "minkradii/lp.hpp"
#include "minkradii/theorems.hpp"

namespace minkradii {
namespace {

using Term = lp::Builder::Term;

// Adds convex weights over the points of p (w ≥ 0, Σw = 1) and returns the
// first weight column; append_hull then puts factor·Σ w_l p_l into a row.
std::size_t add_hull_weights(lp::Builder& b, const VPolytope& p) {
  const std::size_t first = b.add_vars(p.size());
  std::vector<Term> sum;
  for (std::size_t l = 0; l < p.size(); ++l) sum.emplace_back(first + l, 1);
  b.add_eq(std::move(sum), 1);
  return first;
}

void append_hull(std::vector<Term>& row, std::size_t first, const VPolytope& p, std::size_t d, const Rational& factor) {
  for (std::size_t l = 0; l < p.size(); ++l)
    if (!p[l][d].is_zero()) row.emplace_back(first + l, factor * p[l][d]);
}

// x is a Minkowski center of P with asymmetry s: s·Σβ_l p_l − (1+s)x = −p_j.
void require_center(lp::Builder& b, const VPolytope& p, const Rational& s, std::size_t x) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    const std::size_t beta = add_hull_weights(b, p);
    for (std::size_t d = 0; d < p.dim(); ++d) {
      std::vector<Term> row{{x + d, -(s + 1)}};
      append_hull(row, beta, p, d, s);
      b.add_eq(std::move(row), -p[j][d]);
    }
  }
}

// Joint feasibility over a center c of C and a translation t of
//   inner·(C − c) ⊂ K − t ⊂ R·(C − c),
// optionally with t a Minkowski center of K.
bool concentric_program(PairMetrics& m, const Rational& inner, bool mutual) {
  const VPolytope& k = m.body();
  const VPolytope& c = m.gauge();
  const std::size_t n = k.dim();
  const Rational& R = m.R();
  lp::Builder b;
  const std::size_t cv = b.add_vars(n, lp::VarSign::Free);
  const std::size_t tv = b.add_vars(n, lp::VarSign::Free);
  require_center(b, c, m.s_gauge(), cv);
  if (mutual) require_center(b, k, m.s_body(), tv);
  // Outer: v_i − t = R Σγ c_l − R c.
  for (std::size_t i = 0; i < k.size(); ++i) {
    const std::size_t gamma = add_hull_weights(b, c);
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Term> row{{cv + d, -R}, {tv + d, 1}};
      append_hull(row, gamma, c, d, R);
      b.add_eq(std::move(row), k[i][d]);
    }
  }
  // Inner: inner·(c_j − c) + t = Σα v_i.
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t alpha = add_hull_weights(b, k);
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Term> row{{cv + d, inner}, {tv + d, -1}};
      append_hull(row, alpha, k, d, 1);
      b.add_eq(std::move(row), inner * c[j][d]);
    }
  }
  return lp::solve(b.build()).status == lp::Status::Optimal;
}

}  // namespace

bool is_minkowski_concentric(PairMetrics& m) { return concentric_program(m, m.r(), false); }
bool is_mirrored_concentric(PairMetrics& m) { return concentric_program(m, -m.r_neg(), false); }
bool are_mutually_concentric(PairMetrics& m, bool mirrored) {
  return concentric_program(m, mirrored ? -m.r_neg() : m.r(), true);
}

bool is_minkowski_concentric(const VPolytope& k, const VPolytope& c) {
  PairMetrics m(k, c);
  return is_minkowski_concentric(m);
}
bool is_mirrored_concentric(const VPolytope& k, const VPolytope& c) {
  PairMetrics m(k, c);
  return is_mirrored_concentric(m);
}
bool are_mutually_concentric(const VPolytope& k, const VPolytope& c, bool mirrored) {
  PairMetrics m(k, c);
  return are_mutually_concentric(m, mirrored);
}

std::optional<Rational> gauge_value(const Vector& z, const VPolytope& c_in) {
  if (z.dim() != c_in.dim()) throw Error(ErrorKind::DimensionMismatch, "gauge_value");
  const VPolytope c = c_in.canonical();
  if (!contains_point(c, Vector(c.dim()))) throw Error(ErrorKind::OriginNotInGauge, "gauge body must contain 0");
  if (z.is_zero()) return Rational(0);
  lp::Builder b;
  const std::size_t rho = b.add_var(lp::VarSign::NonNegative, Rational(1));
  const std::size_t nu = b.add_vars(c.size());
  for (std::size_t d = 0; d < c.dim(); ++d) {
    std::vector<Term> row;
    append_hull(row, nu, c, d, 1);
    b.add_eq(std::move(row), z[d]);
  }
  std::vector<Term> sum{{rho, -1}};
  for (std::size_t j = 0; j < c.size(); ++j) sum.emplace_back(nu + j, 1);
  b.add_eq(std::move(sum), 0);
  const auto res = lp::solve(b.build());
  if (res.status != lp::Status::Optimal) return std::nullopt;
  return res.primal[rho];
}

std::optional<Rational> containment_factor(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "containment_factor");
  const VPolytope outer = b.canonical();
  Rational best(0);
  const VPolytope inner = a.canonical();
  for (const auto& v : inner.vertices()) {
    const auto g = gauge_value(v, outer);
    if (!g) return std::nullopt;
    best = max(best, *g);
  }
  return best;
}

SimplexCompleteness simplex_complete(const VPolytope& s_in, const VPolytope& c) {
  if (s_in.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "simplex_complete");
  const VPolytope s = s_in.canonical();
  if (!is_simplex(s)) throw Error(ErrorKind::DegenerateSimplex, "body is not a nondegenerate simplex");
  const std::size_t n = s.dim();
  const VPolytope cc = difference_body(c);
  const VPolytope ball = scale(cc, diameter(s, cc).value);

  SimplexCompleteness out;
  out.difference_inside = contains(ball, difference_body(s));
  // h(ball, a_f) ≤ (n+1)(b_f − a_f·c) on every facet covers both S − c and
  // −S + c at once because the ball is symmetric.
  const Rational n1(static_cast<long>(n + 1));
  lp::Builder b;
  const std::size_t cv = b.add_vars(n, lp::VarSign::Free);
  const HPolytope hrep = simplex_hrep(s);
  for (const auto& f : hrep.halfspaces()) {
    std::vector<Term> row;
    for (std::size_t d = 0; d < n; ++d)
      if (!f.normal[d].is_zero()) row.emplace_back(cv + d, n1 * f.normal[d]);
    b.add_le(std::move(row), n1 * f.offset - support_value(ball, f.normal));
  }
  const auto res = lp::solve(b.build());
  if (res.status == lp::Status::Optimal) {
    Vector center(n);
    for (std::size_t d = 0; d < n; ++d) center[d] = res.primal[cv + d];
    out.center = center;
  }
  out.complete = out.difference_inside && out.center.has_value();
  return out;
}

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "complete";
    case Completeness::NotComplete: return "not-complete";
    case Completeness::Undecidable: return "undecidable";
  }
  return "?";
}

Completeness decide_completeness(PairMetrics& m) {
  if (is_simplex(m.body()))
    return simplex_complete(m.body(), m.gauge()).complete ? Completeness::Complete : Completeness::NotComplete;
  if (is_constant_width(m.body(), m.gauge())) return Completeness::Complete;
  // In the plane completeness and constant width coincide.
  if (m.dim() == 2) return Completeness::NotComplete;
  return Completeness::Undecidable;
}

bool is_equilateral(const VPolytope& s_in, const VPolytope& c) {
  const VPolytope s = s_in.canonical();
  if (!is_simplex(s)) throw Error(ErrorKind::DegenerateSimplex, "body is not a nondegenerate simplex");
  const Rational d = diameter(s, c).value;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (sym_gauge_norm(s[j] - s[i], c) != d) return false;
  return true;
}

}  // namespace minkradii
