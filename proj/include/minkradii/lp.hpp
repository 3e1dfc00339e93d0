#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "minkradii/rational.hpp"

namespace minkradii::lp {

enum class VarSign { NonNegative, Free };

/// minimize objective·x  subject to  A x = rhs, with per-variable sign markers.
struct LinearProgram {
  Vector objective;
  Matrix constraints;
  Vector rhs;
  std::vector<VarSign> signs;

  std::size_t num_vars() const { return signs.size(); }
  std::size_t num_rows() const { return rhs.dim(); }

  /// Throws MalformedProgram when the shapes disagree.
  void validate() const;

  /// Plain-text tableau dump for debugging.
  std::string dump() const;
};

enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

/// When `status == Optimal`: `primal`, `dual` and `value` are set and satisfy
/// primal/dual feasibility and c·x = b·y exactly. When `Infeasible`:
/// `farkas` holds y with Aᵀy ≤ 0 on nonnegative columns, Aᵀy = 0 on free
/// columns and b·y > 0. When `Unbounded`: `primal` is a feasible point and
/// `ray` a direction with A·ray = 0, sign-feasible, and c·ray < 0.
struct Outcome {
  Status status = Status::Infeasible;
  Vector primal;
  Vector dual;
  Rational value;
  Vector farkas;
  Vector ray;
  std::size_t pivots = 0;
};

Outcome solve(const LinearProgram& program);

/// Independent exact re-check of an optimal outcome: primal feasibility,
/// dual feasibility, complementary slackness and strong duality.
bool verify_outcome(const LinearProgram& program, const Outcome& outcome);

/// Checks a Farkas infeasibility witness against the program.
bool verify_infeasibility(const LinearProgram& program, const Vector& farkas);

/// Incremental construction of sparse programs with named index handles.
class Builder {
 public:
  using Term = std::pair<std::size_t, Rational>;

  std::size_t add_var(VarSign sign = VarSign::NonNegative, Rational cost = 0);
  std::size_t add_vars(std::size_t count, VarSign sign = VarSign::NonNegative);
  void set_cost(std::size_t var, Rational cost);

  void add_eq(std::vector<Term> terms, Rational rhs);
  /// terms ≤ rhs, realised with a fresh nonnegative slack.
  void add_le(std::vector<Term> terms, Rational rhs);

  std::size_t num_vars() const { return signs_.size(); }

  LinearProgram build() const;

 private:
  std::vector<VarSign> signs_;
  std::vector<Rational> costs_;
  std::vector<std::vector<Term>> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace minkradii::lp
