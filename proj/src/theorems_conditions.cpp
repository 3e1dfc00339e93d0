#include "minkradii/error.hpp"
#include "minkradii/theorems.hpp"

namespace minkradii {
namespace {

bool fits_translated(const VPolytope& inner, const VPolytope& outer) {
  const auto r = circumradius(inner, outer);
  return r && r->value <= 1;
}

void require_triangle(const VPolytope& s) {
  if (s.dim() != 2) throw Error(ErrorKind::NotPlanar, "triangle conditions live in the plane");
  if (!is_simplex(s)) throw Error(ErrorKind::NotATriangle, "body is not a nondegenerate triangle");
}

}  // namespace

InequalityReport check_radius_ratios(PairMetrics& m) {
  InequalityReport rep;
  const Rational& sk = m.s_body();
  const Rational& sc = m.s_gauge();
  const Rational mirrored = m.R() / m.r_neg();
  rep.checks.push_back({"max-asymmetry <= R/r(K,-C)", max(sk, sc), mirrored});
  if (sc == mirrored) rep.implications.emplace_back("body mirrored concentric wrt gauge", is_mirrored_concentric(m));
  if (sk == mirrored) {
    PairMetrics swapped(m.gauge(), m.body());
    rep.implications.emplace_back("gauge mirrored concentric wrt body", is_mirrored_concentric(swapped));
  }
  const Rational R_ratio = m.R() / m.R_diff();
  const Rational r_ratio = m.r() / m.r_diff();
  rep.checks.push_back({"(s(C)+1)/s(C) <= R/R(K,C-C)", (sc + 1) / sc, R_ratio});
  rep.checks.push_back({"R/R(K,C-C) <= s(C)+1", R_ratio, sc + 1});
  rep.checks.push_back({"(s(C)+1)/s(C) <= r/r(K,C-C)", (sc + 1) / sc, r_ratio});
  rep.checks.push_back({"r/r(K,C-C) <= s(C)+1", r_ratio, sc + 1});
  rep.checks.push_back({"reflected ratios <= min-asymmetry", max(m.r_neg() / m.r(), m.R_neg() / m.R()), min(sk, sc)});
  rep.checks.push_back({"R r(K,C-C) / (r R(K,C-C)) <= s(C)", R_ratio / r_ratio, sc});
  return rep;
}

InequalityReport check_breadth_split(const VPolytope& c_in, const Rational& r, const std::vector<Vector>& dirs) {
  const VPolytope c = c_in.canonical();
  const Asymmetry a = asymmetry(c);
  if (!is_minkowski_center(c, Vector(c.dim()), a.s))
    throw Error(ErrorKind::NotCentered, "gauge must be Minkowski centered at the origin");
  if (r < 0 || r > 1) throw Error(ErrorKind::ParameterViolation, "r must lie in [0, 1]");
  const Rational& s = a.s;
  const Rational lower = (1 + s * r) / (1 + s);
  const Rational upper = (r + s) / (1 + s);
  InequalityReport rep;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vector& dir = dirs[i];
    if (dir.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "direction");
    if (dir.is_zero()) throw Error(ErrorKind::ZeroDirection, "direction must be nonzero");
    const Rational plus = support_value(c, dir);
    const Rational minus = support_value(c, -dir);
    const Rational ratio = (plus + r * minus) / (plus + minus);
    const std::string tag = "direction " + std::to_string(i);
    rep.checks.push_back({tag + " lower", lower, ratio});
    rep.checks.push_back({tag + " upper", ratio, upper});
  }
  return rep;
}

InequalityReport check_ratio_bounds(PairMetrics& m) {
  InequalityReport rep;
  const Rational& sk = m.s_body();
  const Rational& sc = m.s_gauge();
  const Rational ratio = m.R() / m.r();
  rep.checks.push_back({"asymmetry quotient <= R/r", max(sk / sc, sc / sk), ratio});
  if (ratio == sk / sc) {
    PairMetrics swapped(m.gauge(), m.body());
    rep.implications.emplace_back("s(K) >= s(C)", sk >= sc);
    rep.implications.emplace_back("gauge mirrored concentric wrt body", is_mirrored_concentric(swapped));
  }
  if (ratio == sc / sk) {
    rep.implications.emplace_back("s(C) >= s(K)", sc >= sk);
    rep.implications.emplace_back("body mirrored concentric wrt gauge", is_mirrored_concentric(m));
  }
  switch (decide_completeness(m)) {
    case Completeness::Complete:
      rep.checks.push_back({"R/r <= s(K)s(C) (complete body)", ratio, sk * sc});
      if (ratio == sk * sc) rep.implications.emplace_back("body and gauge concentric", are_mutually_concentric(m));
      break;
    case Completeness::NotComplete:
      rep.notes.push_back("body not complete: upper bound not applicable");
      break;
    case Completeness::Undecidable:
      rep.notes.push_back(std::string(to_string(ErrorKind::CompletenessUndecidable)) + ": upper bound skipped");
      break;
  }
  return rep;
}

ConditionVector simplex_equality_conditions(const VPolytope& s_in, const VPolytope& c) {
  const VPolytope s = s_in.canonical();
  if (!is_simplex(s)) throw Error(ErrorKind::DegenerateSimplex, "body is not a nondegenerate simplex");
  PairMetrics m(s, c);
  const Rational n(static_cast<long>(m.dim()));
  const Rational& sc = m.s_gauge();
  const Rational half_d = m.D() / 2;
  const VPolytope ss = difference_body(s);
  const VPolytope ball = scale(m.gauge_diff(), half_d);
  const VPolytope widened = scale(m.gauge(), half_d * (sc + 1));

  ConditionVector cv;
  cv.add("inclusion chain",
         fits_translated(scale(s, (n + 1) / n), ss) && contains(ball, ss) && fits_translated(ball, widened) &&
             fits_translated(widened, scale(negate(s), n + 1)));
  cv.add("equality in both chains", eval_chain(ChainId::GeneralizedChain, m).all_equal() &&
                                        eval_chain(ChainId::BohnenblustChain, m).all_equal());
  cv.add("equality in generalized concentricity", eval_chain(ChainId::Generalized, m).all_equal());
  cv.add("equality in the Jung bound", m.R() / m.D() == n * (sc + 1) / (2 * (n + 1)));
  cv.add("complete with R = n s(C) r", simplex_complete(s, c).complete && m.R() == n * sc * m.r());
  return cv;
}

InclusionChainCheck inclusion_chain_check(PairMetrics& m) {
  InclusionChainCheck out{eval_chain(ChainId::ExtendedJung, m), {}};
  const VPolytope widened = scale(m.gauge(), m.D() / 2 * (m.s_gauge() + 1));
  out.equivalence.add("complete chain all equal", eval_chain(ChainId::CompleteChain, m).all_equal());
  out.equivalence.add("widened gauge fits in reflected body",
                      fits_translated(widened, scale(negate(m.body()), m.s_body() + 1)));
  return out;
}

InclusionChainCheck inclusion_chain_check(const VPolytope& k, const VPolytope& c) {
  PairMetrics m(k, c);
  return inclusion_chain_check(m);
}

CompleteSimplexReport complete_simplex_ratios(const VPolytope& s_in, const VPolytope& c) {
  const VPolytope s = s_in.canonical();
  CompleteSimplexReport rep;
  if (!simplex_complete(s, c).complete) {
    rep.notes.push_back("simplex not complete: nothing evaluated");
    return rep;
  }
  rep.applicable = true;
  PairMetrics pos(s, c);
  PairMetrics neg(negate(s), c);
  const Rational n(static_cast<long>(s.dim()));
  const Rational& sc = pos.s_gauge();
  rep.lower = n / sc;
  rep.upper = n * sc;
  rep.ratio_pos = pos.R() / pos.r();
  rep.ratio_neg = neg.R() / neg.r();
  rep.bounds_hold = rep.lower <= rep.ratio_pos && rep.ratio_pos <= rep.upper && rep.lower <= rep.ratio_neg &&
                    rep.ratio_neg <= rep.upper;
  const ConditionVector cond_pos = simplex_equality_conditions(s, c);
  const ConditionVector cond_neg = simplex_equality_conditions(negate(s), c);
  auto law = [](bool a, bool b, bool c3) { return a == b && b == c3; };
  rep.cross_law_pos = law(rep.ratio_pos == rep.upper, rep.ratio_neg == rep.lower, cond_pos.all_true());
  rep.cross_law_neg = law(rep.ratio_neg == rep.upper, rep.ratio_pos == rep.lower, cond_neg.all_true());
  if (!cond_pos.consistent || !cond_neg.consistent) rep.notes.push_back("equality conditions inconsistent");
  return rep;
}

VPolytope triangle_blend(const VPolytope& s, const Rational& lambda) {
  if (lambda < 0 || lambda > 1) throw Error(ErrorKind::ParameterViolation, "lambda must lie in [0, 1]");
  if (lambda == 0) return negate(s).canonical();
  if (lambda == 1) return s.canonical();
  return minkowski_sum(scale(s, lambda), scale(negate(s), 1 - lambda));
}

std::optional<TriangleBlend> decompose_triangle_blend(const VPolytope& s_in, const VPolytope& c_in) {
  const VPolytope s = s_in.canonical();
  const VPolytope c = c_in.canonical();
  require_triangle(s);
  if (c.dim() != 2) throw Error(ErrorKind::NotPlanar, "gauge must be planar");
  if (!is_minkowski_center(s, Vector(2))) throw Error(ErrorKind::NotCentered, "triangle must be Minkowski centered");
  if (!same_body(difference_body(c), difference_body(s))) return std::nullopt;

  // t·a + λ(h(S,a) − h(−S,a)) = h(C,a) − h(−S,a) on the three facet normals.
  std::vector<Vector> rows;
  Vector rhs(3);
  const HPolytope hrep = simplex_hrep(s);
  const auto& facets = hrep.halfspaces();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Vector& a = facets[f].normal;
    const Rational neg = support_value(s, -a);
    rows.push_back(Vector{a[0], a[1], support_value(s, a) - neg});
    rhs[f] = support_value(c, a) - neg;
  }
  const auto sol = solve_linear(Matrix::from_rows(rows), rhs);
  if (sol.kind != LinearSolution::Kind::Unique) return std::nullopt;
  TriangleBlend out{sol.solution[2], Vector{sol.solution[0], sol.solution[1]}};
  if (out.lambda < 0 || out.lambda > 1) return std::nullopt;
  if (!same_body(c, translate(triangle_blend(s, out.lambda), out.translation))) return std::nullopt;
  return out;
}

ConditionVector planar_triangle_conditions(const VPolytope& s_in, const VPolytope& c) {
  require_triangle(s_in.canonical());
  if (c.dim() != 2) throw Error(ErrorKind::NotPlanar, "gauge must be planar");
  const VPolytope s = translate(s_in.canonical(), -asymmetry(s_in).center);
  PairMetrics m(s, c);
  const Rational& sc = m.s_gauge();
  const Rational half_d = m.D() / 2;
  const VPolytope ss = difference_body(s);
  const VPolytope ball = scale(m.gauge_diff(), half_d);
  const VPolytope widened = scale(m.gauge(), half_d * (sc + 1));
  const bool constant_width = is_constant_width(s, c);
  const Rational jung = m.R() / m.D();

  ConditionVector cv;
  cv.add("inclusion chain", contains(ss, scale(s, Rational(3, 2))) && same_body(ss, ball) &&
                                fits_translated(ball, widened) && fits_translated(widened, scale(negate(s), 3)));
  cv.add("equality in the joined chain", eval_chain(ChainId::CompleteChain, m).all_equal());
  cv.add("equality in generalized concentricity", eval_chain(ChainId::Generalized, m).all_equal());
  cv.add("equality in the Jung bound", jung == (sc + 1) / 3);
  cv.add("constant width with R = 2 s(C) r", constant_width && m.R() == 2 * sc * m.r());
  cv.add("constant width with j(S,C) >= j(-S,C)", constant_width && jung >= jung_ratio(negate(s), c));
  // The blend is only defined up to scale: normalise so that C − C = S − S.
  const auto blend = decompose_triangle_blend(s, scale(c, diameter(s, m.gauge_diff()).value));
  cv.add("gauge is a blend with lambda <= 1/2", blend && blend->lambda <= Rational(1, 2));
  return cv;
}

}  // namespace minkradii
