#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minkradii/bodies.hpp"
#include "minkradii/rational.hpp"

namespace minkradii {

/// splitmix64 (Steele, Lea, Flood): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ z>>30)·0xBF58476D1CE4E5B9, z = (z ^ z>>27)·0x94D049BB133111EB,
/// output z ^ z>>31. Chosen because it is tiny and fully specified, so seeded
/// suites reproduce across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Integer in [lo, hi].
  long between(long lo, long hi);
  /// p/q with |p| ≤ bound, 1 ≤ q ≤ bound.
  Rational rational(long bound);

 private:
  std::uint64_t state_;
};

enum class Family { SandwichInner, SandwichOuter, CompleteNonconcentric, TriangleBlend, Random };
const char* to_string(Family f);

struct ExamplePair {
  Family family = Family::Random;
  VPolytope simplex;
  VPolytope gauge;
  std::vector<std::pair<std::string, Rational>> parameters;
  std::optional<Vector> point;  ///< extra vertex p of the complete non-concentric pair
};

/// conv{e_1, …, e_n, −(e_1+…+e_n)}: centroid and unique Minkowski center at 0.
///
/// Regular Euclidean simplices have irrational coordinates. Every statement
/// checked here is invariant under a simultaneous affine map of body and
/// gauge, so this rational simplex stands in for the regular one.
VPolytope standard_centered_simplex(std::size_t n);

enum class Sandwich { Inner, Outer };

/// Simplex S with a gauge sandwiched as λS + μ(−S) ⊂ C ⊂ (λ+nμ)S ∩ (nλ+μ)(−S):
/// Inner returns the left end, Outer the right end. Requires λ ≥ μ ≥ 0, λ > 0.
ExamplePair sandwich_pair(std::size_t n, const Rational& lambda, const Rational& mu, Sandwich variant);

/// C = conv({p} ∪ (S−S)) with p the lexicographically first vertex of
/// (n+1)(S ∩ −S) outside S−S, or the explicit `p` when given.
ExamplePair complete_nonconcentric_pair(std::size_t n, const std::optional<Vector>& p = std::nullopt);

/// Planar C = λS + (1−λ)(−S), λ ∈ [0,1].
ExamplePair triangle_blend_pair(const Rational& lambda);

/// Canonical full-dimensional body from `count` random points with
/// coordinates p/q, |p|, q ≤ bound. Redraws degenerate samples up to 100 times.
VPolytope random_vpolytope(std::size_t n, std::size_t count, long bound, Rng& rng);
VPolytope random_vpolytope(std::size_t n, std::size_t count, long bound, std::uint64_t seed);
/// Same, additionally redrawing centrally symmetric samples.
VPolytope random_nonsymmetric_vpolytope(std::size_t n, std::size_t count, long bound, Rng& rng);
/// Random nondegenerate n-simplex.
VPolytope random_simplex(std::size_t n, long bound, Rng& rng);

}  // namespace minkradii
