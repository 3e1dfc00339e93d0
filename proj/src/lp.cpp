#include "minkradii/lp.hpp"

#include <sstream>

namespace minkradii::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

void LinearProgram::validate() const {
  const std::size_t n = signs.size();
  if (objective.dim() != n) throw Error(ErrorKind::MalformedProgram, "objective length != number of variables");
  if (constraints.rows() != rhs.dim()) throw Error(ErrorKind::MalformedProgram, "constraint rows != |rhs|");
  if (constraints.rows() > 0 && constraints.cols() != n) {
    throw Error(ErrorKind::MalformedProgram, "constraint columns != number of variables");
  }
}

std::string LinearProgram::dump() const {
  std::ostringstream os;
  os << "min";
  for (std::size_t j = 0; j < num_vars(); ++j) os << ' ' << objective[j];
  os << "\nsigns";
  for (auto s : signs) os << ' ' << (s == VarSign::Free ? "free" : "+");
  os << '\n';
  for (std::size_t i = 0; i < num_rows(); ++i) {
    for (std::size_t j = 0; j < num_vars(); ++j) os << constraints(i, j) << ' ';
    os << "= " << rhs[i] << '\n';
  }
  return os.str();
}

namespace {

// Dense tableau over the sign-normalised system D·A x = D·b (D = diag(±1),
// making the rhs nonnegative), with one artificial column per row and the
// reduced-cost row stored last. Free variables are split into a pair of
// nonnegative columns.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& p) : program_(p), m_(p.num_rows()) {
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      pos_col_.push_back(ncols_++);
      neg_col_.push_back(p.signs[j] == VarSign::Free ? ncols_++ : npos);
    }
    structural_ = ncols_;
    ncols_ += m_;
    rhs_ = ncols_;
    rows_.assign(m_ + 1, std::vector<Rational>(ncols_ + 1));
    row_sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      row_sign_[i] = p.rhs[i].sign() < 0 ? -1 : 1;
      const Rational s = row_sign_[i];
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        const Rational& a = p.constraints(i, j);
        if (a.is_zero()) continue;
        rows_[i][pos_col_[j]] = s * a;
        if (neg_col_[j] != npos) rows_[i][neg_col_[j]] = -(s * a);
      }
      rows_[i][structural_ + i] = 1;
      rows_[i][rhs_] = s * p.rhs[i];
      basis_.push_back(structural_ + i);
    }
    cost_.assign(ncols_, Rational(0));
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      cost_[pos_col_[j]] = p.objective[j];
      if (neg_col_[j] != npos) cost_[neg_col_[j]] = -p.objective[j];
    }
  }

  Outcome run() {
    Outcome out;
    // Phase 1: minimise the sum of artificials.
    std::vector<Rational> phase1(ncols_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) phase1[structural_ + i] = 1;
    load_objective(phase1);
    if (iterate() != npos) throw Error(ErrorKind::MalformedProgram, "phase 1 reported unbounded");
    const Rational infeasibility = -rows_[m_][rhs_];
    if (infeasibility.sign() > 0) {
      out.status = Status::Infeasible;
      out.farkas = Vector(m_);
      for (std::size_t i = 0; i < m_; ++i) {
        out.farkas[i] = Rational(row_sign_[i]) * (Rational(1) - rows_[m_][structural_ + i]);
      }
      out.pivots = pivots_;
      return out;
    }
    drive_out_artificials();

    load_objective(cost_);
    const std::size_t unbounded_col = iterate();
    out.primal = primal();
    out.pivots = pivots_;
    if (unbounded_col != npos) {
      out.status = Status::Unbounded;
      out.ray = ray(unbounded_col);
      return out;
    }
    out.status = Status::Optimal;
    out.dual = Vector(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      out.dual[i] = Rational(row_sign_[i]) * (-rows_[m_][structural_ + i]);
    }
    out.value = dot(program_.objective, out.primal);
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void load_objective(const std::vector<Rational>& c) {
    auto& obj = rows_[m_];
    for (std::size_t j = 0; j <= ncols_; ++j) obj[j] = j < ncols_ ? c[j] : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) {
        if (!rows_[i][j].is_zero()) obj[j].sub_product(cb, rows_[i][j]);
      }
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    auto& prow = rows_[r];
    const Rational inv = Rational(1) / prow[q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= ncols_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || rows_[i][q].is_zero()) continue;
      const Rational f = rows_[i][q];
      auto& row = rows_[i];
      for (std::size_t j : nz) row[j].sub_product(f, prow[j]);
    }
    basis_[r] = q;
    ++pivots_;
  }

  // Entering column: most negative reduced cost, switching to Bland's
  // smallest-index rule after any degenerate pivot. A cycle consists solely
  // of degenerate pivots, so every pivot inside one would be a Bland pivot,
  // and Bland's rule cannot cycle. Leaving row ties go to the smallest basic
  // index. Returns npos at optimality or the unbounded entering column.
  std::size_t iterate() {
    bool bland = false;
    for (;;) {
      const auto& obj = rows_[m_];
      std::size_t q = npos;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (obj[j].sign() >= 0) continue;
        if (q == npos || (!bland && obj[j] < obj[q])) q = j;
        if (bland) break;
      }
      if (q == npos) return npos;
      std::size_t r = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][q].sign() <= 0) continue;
        Rational ratio = rows_[i][rhs_] / rows_[i][q];
        if (r == npos || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == npos) return q;
      bland = best.is_zero();
      pivot(r, q);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < structural_) continue;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (!rows_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero
      // and never meets a nonzero entry in a structural column.
    }
  }

  Vector primal() const {
    std::vector<Rational> x(ncols_);
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = rows_[i][rhs_];
    return to_original(x);
  }

  Vector ray(std::size_t q) const {
    std::vector<Rational> d(ncols_);
    d[q] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!rows_[i][q].is_zero()) d[basis_[i]] = -rows_[i][q];
    }
    return to_original(d);
  }

  Vector to_original(const std::vector<Rational>& x) const {
    Vector out(program_.num_vars());
    for (std::size_t j = 0; j < program_.num_vars(); ++j) {
      out[j] = x[pos_col_[j]];
      if (neg_col_[j] != npos) out[j] -= x[neg_col_[j]];
    }
    return out;
  }

  const LinearProgram& program_;
  std::size_t m_;
  std::size_t ncols_ = 0;
  std::size_t structural_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::size_t> pos_col_;
  std::vector<std::size_t> neg_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> row_sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::size_t pivots_ = 0;
};

Rational row_times(const LinearProgram& p, std::size_t i, const Vector& x) {
  Rational s;
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (!p.constraints(i, j).is_zero() && !x[j].is_zero()) s += p.constraints(i, j) * x[j];
  }
  return s;
}

Rational col_times(const LinearProgram& p, std::size_t j, const Vector& y) {
  Rational s;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (!p.constraints(i, j).is_zero() && !y[i].is_zero()) s += p.constraints(i, j) * y[i];
  }
  return s;
}

}  // namespace

Outcome solve(const LinearProgram& program) {
  program.validate();
  Tableau t(program);
  return t.run();
}

bool verify_outcome(const LinearProgram& p, const Outcome& o) {
  if (o.status != Status::Optimal) return false;
  if (o.primal.dim() != p.num_vars() || o.dual.dim() != p.num_rows()) return false;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (row_times(p, i, o.primal) != p.rhs[i]) return false;
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const Rational reduced = p.objective[j] - col_times(p, j, o.dual);
    if (p.signs[j] == VarSign::Free) {
      if (!reduced.is_zero()) return false;
    } else {
      if (o.primal[j].sign() < 0 || reduced.sign() < 0) return false;
      if (!(o.primal[j] * reduced).is_zero()) return false;
    }
  }
  return dot(p.objective, o.primal) == o.value && dot(p.rhs, o.dual) == o.value;
}

bool verify_infeasibility(const LinearProgram& p, const Vector& y) {
  if (y.dim() != p.num_rows()) return false;
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const Rational v = col_times(p, j, y);
    if (p.signs[j] == VarSign::Free ? !v.is_zero() : v.sign() > 0) return false;
  }
  return dot(p.rhs, y).sign() > 0;
}

// ---------------------------------------------------------------------------

std::size_t Builder::add_var(VarSign sign, Rational cost) {
  signs_.push_back(sign);
  costs_.push_back(std::move(cost));
  return signs_.size() - 1;
}

std::size_t Builder::add_vars(std::size_t count, VarSign sign) {
  const std::size_t first = signs_.size();
  for (std::size_t k = 0; k < count; ++k) add_var(sign);
  return first;
}

void Builder::set_cost(std::size_t var, Rational cost) { costs_.at(var) = std::move(cost); }

void Builder::add_eq(std::vector<Term> terms, Rational rhs) {
  rows_.push_back(std::move(terms));
  rhs_.push_back(std::move(rhs));
}

void Builder::add_le(std::vector<Term> terms, Rational rhs) {
  const std::size_t slack = add_var(VarSign::NonNegative);
  terms.emplace_back(slack, 1);
  add_eq(std::move(terms), std::move(rhs));
}

LinearProgram Builder::build() const {
  LinearProgram p;
  p.signs = signs_;
  p.objective = Vector(costs_);
  p.rhs = Vector(rhs_);
  p.constraints = Matrix(rows_.size(), signs_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, a] : rows_[i]) {
      if (j >= signs_.size()) throw Error(ErrorKind::MalformedProgram, "term references unknown variable");
      p.constraints(i, j) += a;
    }
  }
  return p;
}

}  // namespace minkradii::lp
