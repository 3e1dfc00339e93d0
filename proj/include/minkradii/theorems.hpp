#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minkradii/bodies.hpp"
#include "minkradii/radii.hpp"
#include "minkradii/rational.hpp"

namespace minkradii {

/// Lazily computed radii of one pair (K, C). Every evaluator below reads its
/// inputs from here so a suite computes each LP at most once per pair.
class PairMetrics {
 public:
  PairMetrics(const VPolytope& k, const VPolytope& c);

  const VPolytope& body() const { return k_; }
  const VPolytope& gauge() const { return c_; }
  std::size_t dim() const { return k_.dim(); }

  const Rational& R();           ///< R(K, C)
  const Rational& r();           ///< r(K, C)
  const Rational& R_neg();       ///< R(K, −C)
  const Rational& r_neg();       ///< r(K, −C)
  const Rational& D();           ///< D(K, C)
  const Asymmetry& asym_body();  ///< s(K) and a center
  const Asymmetry& asym_gauge();
  const Rational& s_body() { return asym_body().s; }
  const Rational& s_gauge() { return asym_gauge().s; }
  const VPolytope& gauge_diff();  ///< C − C
  const Rational& R_diff();       ///< R(K, C − C)
  const Rational& r_diff();       ///< r(K, C − C)
  bool gauge_symmetric();

 private:
  VPolytope k_, c_;
  std::optional<Rational> R_, r_, R_neg_, r_neg_, D_, R_diff_, r_diff_;
  std::optional<Asymmetry> asym_k_, asym_c_;
  std::optional<VPolytope> c_diff_;
  std::optional<bool> c_sym_;
};

enum class ChainId {
  Bohnenblust,          ///< j(K,C) ≤ n/(n+1), symmetric C
  ExtendedBohnenblust,  ///< j(K,C) ≤ s(K)(s(C)+1) / (2(s(K)+1))
  JungBound,            ///< j(K,C) ≤ n(s(C)+1) / (2(n+1))
  Concentricity,        ///< r + R ≤ D, symmetric C
  SymmetricChain,       ///< (1+s(K))r ≤ r+R ≤ (1+s(K))/s(K)·R ≤ D, symmetric C
  GeneralizedChain,     ///< (1+s(K))r⁻ ≤ r⁻+R ≤ s(C)r+R ≤ ½(1+s(C))D
  BohnenblustChain,     ///< (1+s(K))r⁻ ≤ r⁻+R ≤ (1+s(K))/s(K)·R ≤ ½(1+s(C))D
  Mirrored,             ///< r⁻ + R ≤ ½(1+s(C))D
  Generalized,          ///< s(C)r + R ≤ ½(1+s(C))D
  CompleteChain,        ///< both chains joined; stated for complete K
  ExtendedJung,         ///< inclusion chain, see eval_chain
};
inline constexpr ChainId kAllChains[] = {
    ChainId::Bohnenblust,      ChainId::ExtendedBohnenblust, ChainId::JungBound, ChainId::Concentricity,
    ChainId::SymmetricChain,   ChainId::GeneralizedChain,    ChainId::BohnenblustChain, ChainId::Mirrored,
    ChainId::Generalized,      ChainId::CompleteChain,       ChainId::ExtendedJung};

const char* to_string(ChainId id);
std::optional<ChainId> chain_from_string(const std::string& name);
/// Chains that are only stated for symmetric gauges.
bool needs_symmetric_gauge(ChainId id);

enum class Relation { Less, Equal, Greater };
const char* to_string(Relation r);  ///< "<", "=", ">"
Relation compare(const Rational& a, const Rational& b);

struct ChainReport {
  ChainId id;
  std::vector<Rational> values;
  std::vector<Relation> relations;  ///< values[i] vs values[i+1] (vs 1 for inclusion chains)
  bool holds = true;                ///< no relation is ">"
  std::vector<std::string> notes;

  bool all_equal() const;
};

/// Numeric chains compare consecutive values. ExtendedJung is an inclusion
/// chain: values are the containment factors ρ_i of each link A_i ⊂ ρ_i·A_{i+1}
/// and relations compare each ρ_i with 1. K is moved to a Minkowski center
/// first, since the first link has no translation.
/// Throws SymmetricGaugeRequired where needs_symmetric_gauge holds and C is not symmetric.
ChainReport eval_chain(ChainId id, PairMetrics& m);
ChainReport eval_chain(ChainId id, const VPolytope& k, const VPolytope& c);

struct ConditionVector {
  std::vector<std::string> names;
  std::vector<bool> values;
  bool consistent = true;  ///< all entries equal
  std::vector<std::string> notes;

  void add(std::string name, bool value);
  bool all_true() const;
  bool all_false() const;
};

// --- concentricity ---------------------------------------------------------

/// ∃ Minkowski center c of C and t with r(K,C)(C−c) ⊂ K−t ⊂ R(K,C)(C−c).
/// One feasibility program over (c, t) and the convex coefficients.
bool is_minkowski_concentric(const VPolytope& k, const VPolytope& c);
bool is_minkowski_concentric(PairMetrics& m);
/// Same with −r(K,−C)(C−c) as the inner body.
bool is_mirrored_concentric(const VPolytope& k, const VPolytope& c);
bool is_mirrored_concentric(PairMetrics& m);
/// Either predicate with t additionally a Minkowski center of K.
bool are_mutually_concentric(const VPolytope& k, const VPolytope& c, bool mirrored = false);
bool are_mutually_concentric(PairMetrics& m, bool mirrored = false);

// --- completeness ----------------------------------------------------------

struct SimplexCompleteness {
  bool complete = false;
  bool difference_inside = false;  ///< S−S ⊂ D(S,C−C)·(C−C)
  std::optional<Vector> center;    ///< c with D'(C−C) ⊂ (n+1)((S−c) ∩ (−S+c))
};

/// Completeness of a simplex, decided on the symmetrized gauge C−C.
SimplexCompleteness simplex_complete(const VPolytope& s, const VPolytope& c);

enum class Completeness { Complete, NotComplete, Undecidable };
const char* to_string(Completeness c);
/// Simplices are decided exactly; other bodies only when of constant width
/// (which implies completeness). Everything else is Undecidable.
Completeness decide_completeness(PairMetrics& m);

// --- inequality collections ------------------------------------------------

struct Inequality {
  std::string name;
  Rational lhs, rhs;  ///< lhs ≤ rhs is asserted
  bool holds() const { return lhs <= rhs; }
  bool tight() const { return lhs == rhs; }
};

struct InequalityReport {
  std::vector<Inequality> checks;
  /// Consequences that must follow when a check is tight, and their outcome.
  std::vector<std::pair<std::string, bool>> implications;
  std::vector<std::string> notes;

  bool holds() const;
};

/// Radius-ratio inequalities: s ≤ R/r(K,−C), the C−C sandwiches of R and r,
/// the reflected ratios, and s(C) ≥ R·r(K,C−C) / (r·R(K,C−C)). Tight first
/// checks trigger the mirrored-concentricity follow-up.
InequalityReport check_radius_ratios(PairMetrics& m);

/// For Minkowski-centered C, r ∈ [0,1] and every direction a:
/// (h(C,a)+h(rC,−a)) / (h(C,a)+h(C,−a)) lies in [(1+s r)/(1+s), (r+s)/(1+s)].
/// Throws NotCentered, ZeroDirection, ParameterViolation.
InequalityReport check_breadth_split(const VPolytope& c, const Rational& r, const std::vector<Vector>& dirs);

/// R/r ≥ max{s(K)/s(C), s(C)/s(K)} always, and R/r ≤ s(K)s(C) when K is
/// complete (skipped and noted when completeness is undecidable here).
InequalityReport check_ratio_bounds(PairMetrics& m);

// --- simplices -------------------------------------------------------------

/// All edges have ½(C−C)-length D(S, C).
bool is_equilateral(const VPolytope& s, const VPolytope& c);

/// The five equivalent equality conditions for a simplex S and any gauge C:
/// inclusion chain, equality in both chains, in the generalized concentricity
/// inequality, in the Jung bound, and completeness with R = n·s(C)·r.
ConditionVector simplex_equality_conditions(const VPolytope& s, const VPolytope& c);

struct InclusionChainCheck {
  ChainReport chain;          ///< ExtendedJung, must always hold
  ConditionVector equivalence;  ///< complete chain all equal ⟺ scaled C ⊂_t (s(K)+1)(−K)
};
InclusionChainCheck inclusion_chain_check(PairMetrics& m);
InclusionChainCheck inclusion_chain_check(const VPolytope& k, const VPolytope& c);

struct CompleteSimplexReport {
  bool applicable = false;  ///< S complete; nothing else is evaluated otherwise
  Rational lower, upper;    ///< n/s(C), n·s(C)
  Rational ratio_pos, ratio_neg;  ///< R/r for S and −S
  bool bounds_hold = false;
  bool cross_law_pos = false;  ///< S right-tight ⟺ −S left-tight ⟺ equality conditions of S
  bool cross_law_neg = false;  ///< same with the roles of S and −S swapped
  std::vector<std::string> notes;

  bool holds() const { return !applicable || (bounds_hold && cross_law_pos && cross_law_neg); }
};
CompleteSimplexReport complete_simplex_ratios(const VPolytope& s, const VPolytope& c);

// --- the plane -------------------------------------------------------------

struct TriangleBlend {
  Rational lambda;
  Vector translation;
};

/// For a Minkowski-centered triangle S and C with C−C = S−S, the (λ, t) with
/// C = t + λS + (1−λ)(−S). nullopt when C−C ≠ S−S or the decomposition fails
/// to verify. Throws NotPlanar, NotATriangle, NotCentered.
std::optional<TriangleBlend> decompose_triangle_blend(const VPolytope& s, const VPolytope& c);

/// λS + (1−λ)(−S) for λ ∈ [0, 1].
VPolytope triangle_blend(const VPolytope& s, const Rational& lambda);

/// Seven equivalent conditions for a triangle and a planar gauge. S is moved
/// to its Minkowski center first. Throws NotPlanar, NotATriangle.
ConditionVector planar_triangle_conditions(const VPolytope& s, const VPolytope& c);

// --- gauge function --------------------------------------------------------

/// min{ρ ≥ 0 : z ∈ ρC}; nullopt when z is outside the cone spanned by C.
/// Not a length: it is not symmetric for non-symmetric C.
/// Throws OriginNotInGauge when 0 ∉ C.
std::optional<Rational> gauge_value(const Vector& z, const VPolytope& c);

/// Smallest ρ with A ⊂ ρB, no translation; B must contain the origin.
std::optional<Rational> containment_factor(const VPolytope& a, const VPolytope& b);

}  // namespace minkradii
