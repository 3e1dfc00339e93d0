#include "minkradii/constructions.hpp"

namespace minkradii {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

long Rng::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Rational Rng::rational(long bound) {
  const long num = between(-bound, bound);
  const long den = between(1, bound);
  return Rational(num, den);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::SandwichInner: return "sandwich-inner";
    case Family::SandwichOuter: return "sandwich-outer";
    case Family::CompleteNonconcentric: return "complete-nonconcentric";
    case Family::TriangleBlend: return "triangle-blend";
    case Family::Random: return "random";
  }
  return "unknown";
}

VPolytope standard_centered_simplex(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::ParameterViolation, "standard simplex needs n >= 2");
  std::vector<Vector> v;
  Vector last(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(Vector::unit(n, i));
    last[i] = -1;
  }
  v.push_back(last);
  return VPolytope(n, std::move(v)).canonical();
}

namespace {

HPolytope dilated_hrep(const HPolytope& h, const Rational& rho, bool mirrored) {
  std::vector<Halfspace> out;
  for (const auto& f : h.halfspaces()) out.push_back({mirrored ? -f.normal : f.normal, f.offset * rho});
  return HPolytope(h.dim(), std::move(out));
}

}  // namespace

ExamplePair sandwich_pair(std::size_t n, const Rational& lambda, const Rational& mu, Sandwich variant) {
  if (!(lambda >= mu && mu.sign() >= 0 && lambda.sign() > 0)) {
    throw Error(ErrorKind::ParameterViolation, "sandwich_pair needs lambda >= mu >= 0 and lambda > 0");
  }
  const VPolytope s = standard_centered_simplex(n);
  ExamplePair out{variant == Sandwich::Inner ? Family::SandwichInner : Family::SandwichOuter, s, s, {}, std::nullopt};
  out.parameters = {{"n", Rational(static_cast<long>(n))}, {"lambda", lambda}, {"mu", mu}};
  if (variant == Sandwich::Inner) {
    out.gauge = mu.is_zero() ? scale(s, lambda) : minkowski_sum(scale(s, lambda), scale(negate(s), mu));
  } else {
    const Rational nn(static_cast<long>(n));
    const HPolytope h = simplex_hrep(s);
    out.gauge = enumerate_vertices(intersect(dilated_hrep(h, lambda + nn * mu, false), dilated_hrep(h, nn * lambda + mu, true)));
  }
  return out;
}

ExamplePair complete_nonconcentric_pair(std::size_t n, const std::optional<Vector>& p) {
  if (n < 2) throw Error(ErrorKind::ParameterViolation, "complete_nonconcentric_pair needs n >= 2");
  const VPolytope s = standard_centered_simplex(n);
  const VPolytope diff = difference_body(s);
  const HPolytope h = simplex_hrep(s);
  const Rational n1(static_cast<long>(n + 1));
  const HPolytope box = intersect(dilated_hrep(h, n1, false), dilated_hrep(h, n1, true));
  std::optional<Vector> chosen;
  if (p) {
    if (p->dim() != n) throw Error(ErrorKind::DimensionMismatch, "complete_nonconcentric_pair point");
    if (!contains_point(box, *p) || contains_point(diff, *p)) {
      throw Error(ErrorKind::ParameterViolation, "p must lie in (n+1)(S ∩ −S) but outside S−S");
    }
    chosen = *p;
  } else {
    const VPolytope corners = enumerate_vertices(box);
    for (const auto& v : corners.vertices()) {
      if (!contains_point(diff, v)) {
        chosen = v;
        break;
      }
    }
  }
  if (!chosen) throw Error(ErrorKind::NoSuchPoint, "(n+1)(S ∩ −S) has no vertex outside S−S");
  std::vector<Vector> pts = diff.vertices();
  pts.push_back(*chosen);
  ExamplePair out{Family::CompleteNonconcentric, s, VPolytope(n, std::move(pts)).canonical(), {}, chosen};
  out.parameters = {{"n", Rational(static_cast<long>(n))}};
  return out;
}

ExamplePair triangle_blend_pair(const Rational& lambda) {
  if (lambda.sign() < 0 || lambda > Rational(1)) throw Error(ErrorKind::ParameterViolation, "lambda must lie in [0,1]");
  const VPolytope s = standard_centered_simplex(2);
  VPolytope c = s;
  if (lambda.is_zero()) {
    c = negate(s);
  } else if (lambda != Rational(1)) {
    c = minkowski_sum(scale(s, lambda), scale(negate(s), Rational(1) - lambda));
  }
  ExamplePair out{Family::TriangleBlend, s, c, {{"lambda", lambda}}, std::nullopt};
  return out;
}

VPolytope random_vpolytope(std::size_t n, std::size_t count, long bound, Rng& rng) {
  if (n < 1 || count < n + 1 || bound < 1) throw Error(ErrorKind::ParameterViolation, "random_vpolytope parameters");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Vector v(n);
      for (std::size_t d = 0; d < n; ++d) v[d] = rng.rational(bound);
      pts.push_back(std::move(v));
    }
    VPolytope body(n, std::move(pts));
    if (is_full_dimensional(body)) return body.canonical();
  }
  throw Error(ErrorKind::ExhaustedRedraws, "no full-dimensional sample after 100 draws");
}

VPolytope random_vpolytope(std::size_t n, std::size_t count, long bound, std::uint64_t seed) {
  Rng rng(seed);
  return random_vpolytope(n, count, bound, rng);
}

VPolytope random_nonsymmetric_vpolytope(std::size_t n, std::size_t count, long bound, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    VPolytope body = random_vpolytope(n, count, bound, rng);
    if (!is_centrally_symmetric(body).symmetric) return body;
  }
  throw Error(ErrorKind::ExhaustedRedraws, "no non-symmetric sample after 100 draws");
}

VPolytope random_simplex(std::size_t n, long bound, Rng& rng) { return random_vpolytope(n, n + 1, bound, rng); }

}  // namespace minkradii
