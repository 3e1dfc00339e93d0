#include "suites.hpp"

#include <array>
#include <string_view>

#include "minkradii/error.hpp"

namespace minkradii::cli {
namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 8> kSuites{{
    {Suite::Chains, "chains"},
    {Suite::RadiusRatios, "radius-ratios"},
    {Suite::BreadthSplit, "breadth-split"},
    {Suite::RatioBounds, "ratio-bounds"},
    {Suite::SimplexEquality, "simplex-equality"},
    {Suite::PlanarTriangle, "planar-triangle"},
    {Suite::InclusionChain, "inclusion-chain"},
    {Suite::CompleteSimplex, "complete-simplex"},
}};

// Independent stream per trial so that any single trial can be replayed.
Rng trial_rng(std::uint64_t seed, std::size_t index) { return Rng(seed ^ (0xD1B54A32D192ED03ULL * (index + 1))); }

std::size_t vertex_count(std::size_t n, Rng& rng) { return n + 1 + rng.below(8 - n); }

VPolytope random_body(std::size_t n, Rng& rng) { return random_vpolytope(n, vertex_count(n, rng), 6, rng); }

Vector random_nonzero(std::size_t n, Rng& rng) {
  for (;;) {
    Vector v(n);
    for (std::size_t d = 0; d < n; ++d) v[d] = rng.rational(5);
    if (!v.is_zero()) return v;
  }
}

ExamplePair random_sandwich(std::size_t n, Rng& rng) {
  const Rational lambda(rng.between(1, 4));
  const Rational mu = Rational(static_cast<long>(rng.below(5)), 4) * lambda;
  return sandwich_pair(n, lambda, mu, rng.below(2) ? Sandwich::Outer : Sandwich::Inner);
}

Json complete_simplex_json(const CompleteSimplexReport& rep) {
  using json_io::to_json;
  Json out{{"applicable", rep.applicable}};
  if (rep.applicable) {
    out["lower"] = to_json(rep.lower);
    out["upper"] = to_json(rep.upper);
    out["ratio"] = to_json(rep.ratio_pos);
    out["reflected_ratio"] = to_json(rep.ratio_neg);
    out["bounds_hold"] = rep.bounds_hold;
    out["cross_law"] = rep.cross_law_pos;
    out["reflected_cross_law"] = rep.cross_law_neg;
  }
  out["notes"] = rep.notes;
  out["holds"] = rep.holds();
  return out;
}

// Uniform-ish rational point of conv(vertices): integer weights in [0, 5].
Vector random_point(const VPolytope& p, Rng& rng) {
  std::vector<long> w(p.size());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = rng.between(0, 5));
  }
  Vector out(p.dim());
  for (std::size_t i = 0; i < p.size(); ++i) out += p[i] * Rational(w[i], total);
  return out;
}

}  // namespace

std::optional<Suite> suite_from_string(const std::string& name) {
  for (const auto& [s, n] : kSuites)
    if (n == name) return s;
  return std::nullopt;
}

const char* to_string(Suite s) {
  for (const auto& [k, n] : kSuites)
    if (k == s) return n.data();
  return "?";
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [s, n] : kSuites) out.emplace_back(n);
  return out;
}

std::vector<Vector> default_directions(const VPolytope& c) {
  std::vector<Vector> dirs;
  for (std::size_t d = 0; d < c.dim(); ++d) {
    dirs.push_back(Vector::unit(c.dim(), d));
    dirs.push_back(-Vector::unit(c.dim(), d));
  }
  const VPolytope diff = difference_body(c);
  for (const auto& v : diff.vertices()) dirs.push_back(v);
  return dirs;
}

Instance random_instance(Suite suite, std::uint64_t seed, std::size_t index, std::size_t dim) {
  Rng rng = trial_rng(seed, index);
  std::size_t n = dim ? dim : (index % 2 ? 3 : 2);
  if (suite == Suite::PlanarTriangle) n = 2;
  switch (suite) {
    case Suite::BreadthSplit: {
      VPolytope c = random_body(n, rng);
      c = translate(c, -asymmetry(c).center);
      Instance inst{c, c, Rational(static_cast<long>(rng.below(11)), 10), default_directions(c)};
      for (int i = 0; i < 3; ++i) inst.directions.push_back(random_nonzero(n, rng));
      return inst;
    }
    case Suite::SimplexEquality:
    case Suite::CompleteSimplex:
      if (index % 4 < 2) {
        const ExamplePair pair = random_sandwich(n, rng);
        return {rng.below(2) ? negate(pair.simplex) : pair.simplex, pair.gauge, {}, {}};
      }
      return {random_simplex(n, 6, rng), random_body(n, rng), {}, {}};
    case Suite::PlanarTriangle: {
      const VPolytope s = random_simplex(2, 6, rng);
      if (index % 2) return {s, random_body(2, rng), {}, {}};
      const VPolytope centered = translate(s, -asymmetry(s).center);
      const Rational lambda(static_cast<long>(rng.below(9)), 8);
      const Rational size(rng.between(1, 6), rng.between(1, 3));
      VPolytope c = scale(triangle_blend(centered, lambda), size);
      return {s, translate(c, random_nonzero(2, rng)), {}, {}};
    }
    default:
      return {random_body(n, rng), random_body(n, rng), {}, {}};
  }
}

Outcome run_suite(Suite suite, const Instance& inst) {
  using json_io::to_json;
  Outcome out;
  switch (suite) {
    case Suite::Chains: {
      PairMetrics m(inst.body, inst.gauge);
      const Completeness completeness = decide_completeness(m);
      Json chains = Json::array();
      Json skipped = Json::array();
      for (auto id : kAllChains) {
        if (needs_symmetric_gauge(id) && !m.gauge_symmetric()) {
          skipped.push_back(to_string(id));
          continue;
        }
        const ChainReport rep = eval_chain(id, m);
        const bool counted = id != ChainId::CompleteChain || completeness == Completeness::Complete;
        if (counted && !rep.holds) out.pass = false;
        chains.push_back(to_json(rep));
      }
      out.result = Json{{"completeness", to_string(completeness)}, {"chains", chains}, {"skipped", skipped}};
      break;
    }
    case Suite::RadiusRatios: {
      PairMetrics m(inst.body, inst.gauge);
      const auto rep = check_radius_ratios(m);
      out = {rep.holds(), to_json(rep)};
      break;
    }
    case Suite::BreadthSplit: {
      const auto dirs = inst.directions.empty() ? default_directions(inst.gauge) : inst.directions;
      const auto rep = check_breadth_split(inst.gauge, inst.ratio, dirs);
      out = {rep.holds(), to_json(rep)};
      out.result["r"] = to_json(inst.ratio);
      break;
    }
    case Suite::RatioBounds: {
      PairMetrics m(inst.body, inst.gauge);
      const auto rep = check_ratio_bounds(m);
      out = {rep.holds(), to_json(rep)};
      break;
    }
    case Suite::SimplexEquality: {
      const auto cv = simplex_equality_conditions(inst.body, inst.gauge);
      out = {cv.consistent, to_json(cv)};
      break;
    }
    case Suite::PlanarTriangle: {
      const auto cv = planar_triangle_conditions(inst.body, inst.gauge);
      out = {cv.consistent, to_json(cv)};
      break;
    }
    case Suite::InclusionChain: {
      const auto rep = inclusion_chain_check(inst.body, inst.gauge);
      out.pass = rep.chain.holds && rep.equivalence.consistent;
      out.result = Json{{"chain", to_json(rep.chain)}, {"equivalence", to_json(rep.equivalence)}};
      break;
    }
    case Suite::CompleteSimplex: {
      const auto rep = complete_simplex_ratios(inst.body, inst.gauge);
      out = {rep.holds(), complete_simplex_json(rep)};
      break;
    }
  }
  return out;
}

ExploreStats explore(std::size_t trials, std::uint64_t seed, std::size_t dim) {
  if (dim < 2 || dim > 4) throw Error(ErrorKind::ParameterViolation, "explore needs 2 <= dim <= 4");
  const std::size_t n = dim;
  const Rational nn(static_cast<long>(n));
  const VPolytope s = standard_centered_simplex(n);
  const VPolytope diff = difference_body(s);
  const HPolytope hrep = simplex_hrep(s);
  auto dilated = [&](const Rational& rho, bool mirrored) {
    std::vector<Halfspace> hs;
    for (const auto& f : hrep.halfspaces()) hs.push_back({mirrored ? -f.normal : f.normal, f.offset * rho});
    return HPolytope(n, std::move(hs));
  };
  const VPolytope box = enumerate_vertices(intersect(dilated(nn + 1, false), dilated(nn + 1, true)));

  ExploreStats stats;
  for (std::size_t t = 0; t < trials; ++t) {
    ++stats.trials;
    Rng rng = trial_rng(seed, t);
    // Either S − S or a sandwich inner end, widened by random points of the
    // matching outer body; every such gauge keeps S and −S complete.
    std::vector<Vector> pts;
    VPolytope outer = box;
    if (t % 2 == 0) {
      pts = diff.vertices();
    } else {
      const ExamplePair inner = random_sandwich(n, rng);
      const Rational& l = inner.parameters[1].second;
      const Rational& m = inner.parameters[2].second;
      pts = sandwich_pair(n, l, m, Sandwich::Inner).gauge.vertices();
      outer = sandwich_pair(n, l, m, Sandwich::Outer).gauge;
    }
    const std::size_t extra = 1 + rng.below(3);
    for (std::size_t i = 0; i < extra; ++i) pts.push_back(random_point(outer, rng));
    const VPolytope c = VPolytope(n, std::move(pts)).canonical();

    for (const VPolytope& k : {s, negate(s)}) {
      ++stats.candidates;
      if (!simplex_complete(k, c).complete) continue;
      ++stats.complete;
      PairMetrics m(k, c);
      const Rational ratio = m.R() / m.r();
      const Rational& sc = m.s_gauge();
      if (!(nn / sc < ratio && ratio < nn * sc)) continue;
      ++stats.strictly_inside;
      PairMetrics swapped(c, k);
      const bool concentric = is_minkowski_concentric(m) && is_mirrored_concentric(m) && are_mutually_concentric(m) &&
                              are_mutually_concentric(m, true) && is_mirrored_concentric(swapped);
      if (!concentric) continue;
      ++stats.all_concentric;
      stats.hits.push_back(Json{{"trial", t},
                                {"body", json_io::to_json(k)},
                                {"gauge", json_io::to_json(c)},
                                {"ratio", json_io::to_json(ratio)}});
    }
  }
  return stats;
}

}  // namespace minkradii::cli
