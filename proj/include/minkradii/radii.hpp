#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minkradii/bodies.hpp"
#include "minkradii/lp.hpp"
#include "minkradii/rational.hpp"

namespace minkradii {

/// A radius value together with the translation that certifies it.
///
/// circumradius: K ⊂ translation + value·C, `attaining` = contact vertices of K.
/// inradius:     value·C + translation ⊂ K, `attaining` = gauge vertices on
///               the boundary of K.
/// diameter:     `attaining` = the diametral vertex pair (indices into the
///               canonical vertex list of K), translation unused.
struct RadiiResult {
  Rational value;
  Vector translation;
  std::vector<std::size_t> attaining;
};

/// Circumradius program in standard form together with the column layout.
///
/// "v_i ∈ t + λC" is bilinear in (λ, μ) for v_i = t + λ Σ_j μ_ij c_j with
/// Σ_j μ_ij = 1; substituting ν_ij = λ μ_ij makes it linear:
///   v_i = t + Σ_j ν_ij c_j,   Σ_j ν_ij = λ,   ν ≥ 0,   minimise λ.
/// Rows are grouped per vertex of K: `dim` coordinate rows followed by the
/// row Σ_j ν_ij − λ = 0.
struct CircumradiusProgram {
  lp::LinearProgram program;
  std::size_t translation_col = 0;  ///< first of dim free columns
  std::size_t lambda_col = 0;
  std::size_t nu_col = 0;           ///< ν_ij at nu_col + i·|C| + j
  std::size_t body_size = 0;
  std::size_t gauge_size = 0;
  std::size_t dim = 0;

  std::size_t point_row(std::size_t i, std::size_t coord) const { return i * (dim + 1) + coord; }
  std::size_t sum_row(std::size_t i) const { return i * (dim + 1) + dim; }
};

CircumradiusProgram circumradius_program(const VPolytope& k, const VPolytope& c);

/// R(K, C); nullopt when infinite (K does not fit in any translate of any dilate of C).
std::optional<RadiiResult> circumradius(const VPolytope& k, const VPolytope& c);
/// Same, returning the raw program outcome as well (used for certificates).
std::optional<RadiiResult> circumradius(const VPolytope& k, const VPolytope& c, lp::Outcome* outcome,
                                        CircumradiusProgram* program);
/// R(K, C), throwing InfiniteRadius when it is infinite.
Rational circumradius_value(const VPolytope& k, const VPolytope& c);

/// r(K, C) = R(C, K)⁻¹, read from the circumradius program of (C, K).
/// `attaining` lists the gauge vertices touching the boundary of K.
RadiiResult inradius(const VPolytope& k, const VPolytope& c);
/// r(K, C) from its own program: maximise λ with λc_j + t = Σ_i α_ji v_i,
/// Σ_i α_ji = 1, α ≥ 0. Slower; kept as an independent cross-check.
RadiiResult inradius_direct(const VPolytope& k, const VPolytope& c);

/// Exact re-check of K ⊂ t + ρC by vertex membership.
bool contained_after_translation(const VPolytope& k, const VPolytope& c, const Rational& rho, const Vector& t);
/// Exact re-check of ρC + t ⊂ K.
bool contains_translated_dilate(const VPolytope& k, const VPolytope& c, const Rational& rho, const Vector& t);

/// ‖z‖ in the norm with unit ball ½(C − C); nullopt when z is outside the span.
std::optional<Rational> sym_gauge_norm(const Vector& z, const VPolytope& c);

/// D(K, C): largest sym_gauge_norm over vertex pairs of K. Ties go to the
/// lexicographically smallest pair. Throws InfiniteRadius if unbounded.
RadiiResult diameter(const VPolytope& k, const VPolytope& c);

struct Asymmetry {
  Rational s;
  Vector center;  ///< one Minkowski center; they need not be unique
};

/// s(K) = R(−K, K) and the center c = −t*/(1+s) read from the witness t*
/// of −K ⊂ t* + sK.
Asymmetry asymmetry(const VPolytope& k);
bool is_minkowski_center(const VPolytope& k, const Vector& c);
bool is_minkowski_center(const VPolytope& k, const Vector& c, const Rational& s);

/// s-breadth 2·h(K−K, s)/h(C−C, s).
Rational breadth(const VPolytope& k, const VPolytope& c, const Vector& s);

/// R(K, C)/D(K, C).
Rational jung_ratio(const VPolytope& k, const VPolytope& c);

/// K − K = (D(K, C)/2)(C − C) as vertex sets.
bool is_constant_width(const VPolytope& k, const VPolytope& c);

/// Shorthand for R(inner, outer) ≤ 1, i.e. inner ⊂ outer up to translation.
bool contained_up_to_translation(const VPolytope& inner, const VPolytope& outer);

}  // namespace minkradii
