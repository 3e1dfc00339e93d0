#pragma once

#include <vector>

#include "minkradii/bodies.hpp"
#include "minkradii/rational.hpp"

namespace minkradii {

/// Witness of optimal containment K ⊂ C': contact points p^j ∈ K on the
/// boundary of C', outer normals a^j of C' at p^j, and convex weights with
/// Σ λ_j a^j = 0.
struct ContainmentCertificate {
  std::vector<Vector> contacts;
  std::vector<Vector> normals;
  std::vector<Rational> weights;

  std::size_t size() const { return contacts.size(); }
};

/// Checks every certificate condition from scratch against the given bodies:
/// 2 ≤ count ≤ n+1, positive weights summing to 1, Σ λ_j a^j = 0, p^j ∈ K,
/// a^j ≠ 0 and a^j·p^j = h(C', a^j). Assumes K ⊂ C' was checked separately.
bool validate(const VPolytope& k, const VPolytope& container, const ContainmentCertificate& cert);

struct Extraction {
  ContainmentCertificate certificate;
  Rational radius;       ///< R(K, C)
  Vector translation;    ///< K ⊂ translation + radius·C
  VPolytope container;   ///< translation + radius·C
  bool perturbed = false;  ///< the fallback re-solve was needed
};

/// Certificate for K ⊂^opt t + R(K,C)·C read off the circumradius dual.
/// Throws InfiniteRadius when R(K, C) is infinite.
Extraction extract(const VPolytope& k, const VPolytope& c);

}  // namespace minkradii
