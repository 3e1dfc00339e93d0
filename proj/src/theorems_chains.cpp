#include <array>
#include <string_view>

#include "minkradii/error.hpp"
#include "minkradii/theorems.hpp"

namespace minkradii {

PairMetrics::PairMetrics(const VPolytope& k, const VPolytope& c) : k_(k.canonical()), c_(c.canonical()) {
  if (k_.dim() != c_.dim()) throw Error(ErrorKind::DimensionMismatch, "pair of bodies");
}

const Rational& PairMetrics::R() {
  if (!R_) R_ = circumradius_value(k_, c_);
  return *R_;
}

const Rational& PairMetrics::r() {
  if (!r_) r_ = inradius(k_, c_).value;
  return *r_;
}

const Rational& PairMetrics::R_neg() {
  if (!R_neg_) R_neg_ = circumradius_value(k_, negate(c_));
  return *R_neg_;
}

const Rational& PairMetrics::r_neg() {
  if (!r_neg_) r_neg_ = inradius(k_, negate(c_)).value;
  return *r_neg_;
}

const Rational& PairMetrics::D() {
  if (!D_) D_ = diameter(k_, c_).value;
  return *D_;
}

const Asymmetry& PairMetrics::asym_body() {
  if (!asym_k_) asym_k_ = asymmetry(k_);
  return *asym_k_;
}

const Asymmetry& PairMetrics::asym_gauge() {
  if (!asym_c_) asym_c_ = asymmetry(c_);
  return *asym_c_;
}

const VPolytope& PairMetrics::gauge_diff() {
  if (!c_diff_) c_diff_ = difference_body(c_);
  return *c_diff_;
}

const Rational& PairMetrics::R_diff() {
  if (!R_diff_) R_diff_ = circumradius_value(k_, gauge_diff());
  return *R_diff_;
}

const Rational& PairMetrics::r_diff() {
  if (!r_diff_) r_diff_ = inradius(k_, gauge_diff()).value;
  return *r_diff_;
}

bool PairMetrics::gauge_symmetric() {
  if (!c_sym_) c_sym_ = is_centrally_symmetric(c_).symmetric;
  return *c_sym_;
}

namespace {

constexpr std::array<std::pair<ChainId, std::string_view>, 11> kChainNames{{
    {ChainId::Bohnenblust, "bohnenblust"},
    {ChainId::ExtendedBohnenblust, "extended-bohnenblust"},
    {ChainId::JungBound, "jung-bound"},
    {ChainId::Concentricity, "concentricity"},
    {ChainId::SymmetricChain, "symmetric-chain"},
    {ChainId::GeneralizedChain, "generalized-chain"},
    {ChainId::BohnenblustChain, "bohnenblust-chain"},
    {ChainId::Mirrored, "mirrored"},
    {ChainId::Generalized, "generalized"},
    {ChainId::CompleteChain, "complete-chain"},
    {ChainId::ExtendedJung, "extended-jung"},
}};

ChainReport numeric_chain(ChainId id, std::vector<Rational> values) {
  ChainReport rep{id, std::move(values), {}, true, {}};
  for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) {
    rep.relations.push_back(compare(rep.values[i], rep.values[i + 1]));
    if (rep.relations.back() == Relation::Greater) rep.holds = false;
  }
  return rep;
}

ChainReport extended_jung(PairMetrics& m) {
  const VPolytope& k = m.body();
  const VPolytope& c = m.gauge();
  const Rational& sk = m.s_body();
  const Rational half_d = m.D() / 2;
  const VPolytope centered = translate(k, -m.asym_body().center);
  const VPolytope kk = difference_body(k);

  ChainReport rep{ChainId::ExtendedJung, {}, {}, true, {}};
  // Each factor is the least ρ with A_i ⊂ ρ·A_{i+1}; the link holds iff ρ ≤ 1.
  const auto first = containment_factor(scale(centered, (sk + 1) / sk), kk);
  const auto second = containment_factor(kk, scale(m.gauge_diff(), half_d));
  const auto third = circumradius(scale(m.gauge_diff(), half_d), scale(c, half_d * (m.s_gauge() + 1)));
  if (!first || !second || !third) throw Error(ErrorKind::InfiniteRadius, "inclusion chain factor");
  rep.values = {*first, *second, third->value};
  for (const auto& v : rep.values) {
    rep.relations.push_back(compare(v, 1));
    if (rep.relations.back() == Relation::Greater) rep.holds = false;
  }
  rep.notes.push_back("body translated to a Minkowski center for the first link");
  rep.notes.push_back("values are containment factors; relations compare each with 1");
  return rep;
}

}  // namespace

const char* to_string(ChainId id) {
  for (const auto& [k, name] : kChainNames)
    if (k == id) return name.data();
  return "?";
}

std::optional<ChainId> chain_from_string(const std::string& name) {
  for (const auto& [k, n] : kChainNames)
    if (n == name) return k;
  return std::nullopt;
}

bool needs_symmetric_gauge(ChainId id) {
  return id == ChainId::Bohnenblust || id == ChainId::Concentricity || id == ChainId::SymmetricChain;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Relation compare(const Rational& a, const Rational& b) {
  if (a < b) return Relation::Less;
  return a == b ? Relation::Equal : Relation::Greater;
}

bool ChainReport::all_equal() const {
  for (auto rel : relations)
    if (rel != Relation::Equal) return false;
  return true;
}

ChainReport eval_chain(ChainId id, PairMetrics& m) {
  if (needs_symmetric_gauge(id) && !m.gauge_symmetric())
    throw Error(ErrorKind::SymmetricGaugeRequired, std::string(to_string(id)) + " needs a symmetric gauge");
  if (id == ChainId::ExtendedJung) return extended_jung(m);

  const Rational n(static_cast<long>(m.dim()));
  const Rational one(1);
  auto jung = [&] { return m.R() / m.D(); };
  auto sk = [&] { return m.s_body(); };
  auto sc = [&] { return m.s_gauge(); };
  auto half_sc_d = [&] { return (one + sc()) * m.D() / 2; };

  switch (id) {
    case ChainId::Bohnenblust:
      return numeric_chain(id, {jung(), n / (n + 1)});
    case ChainId::ExtendedBohnenblust:
      return numeric_chain(id, {jung(), sk() * (sc() + 1) / (2 * (sk() + 1))});
    case ChainId::JungBound:
      return numeric_chain(id, {jung(), n * (sc() + 1) / (2 * (n + 1))});
    case ChainId::Concentricity:
      return numeric_chain(id, {m.r() + m.R(), m.D()});
    case ChainId::SymmetricChain:
      return numeric_chain(id, {(one + sk()) * m.r(), m.r() + m.R(), (one + sk()) / sk() * m.R(), m.D()});
    case ChainId::GeneralizedChain:
      return numeric_chain(id, {(one + sk()) * m.r_neg(), m.r_neg() + m.R(), sc() * m.r() + m.R(), half_sc_d()});
    case ChainId::BohnenblustChain:
      return numeric_chain(id,
                           {(one + sk()) * m.r_neg(), m.r_neg() + m.R(), (one + sk()) / sk() * m.R(), half_sc_d()});
    case ChainId::Mirrored:
      return numeric_chain(id, {m.r_neg() + m.R(), half_sc_d()});
    case ChainId::Generalized:
      return numeric_chain(id, {sc() * m.r() + m.R(), half_sc_d()});
    case ChainId::CompleteChain: {
      auto rep = numeric_chain(id, {(one + sk()) * m.r_neg(), m.r_neg() + m.R(), (one + sk()) / sk() * m.R(),
                                    sc() * m.r() + m.R(), half_sc_d()});
      rep.notes.push_back("hypothesis: K complete");
      return rep;
    }
    case ChainId::ExtendedJung:
      break;
  }
  throw Error(ErrorKind::ParameterViolation, "unknown chain");
}

ChainReport eval_chain(ChainId id, const VPolytope& k, const VPolytope& c) {
  PairMetrics m(k, c);
  return eval_chain(id, m);
}

void ConditionVector::add(std::string name, bool value) {
  names.push_back(std::move(name));
  values.push_back(value);
  consistent = all_true() || all_false();
}

bool ConditionVector::all_true() const {
  for (bool v : values)
    if (!v) return false;
  return true;
}

bool ConditionVector::all_false() const {
  for (bool v : values)
    if (v) return false;
  return true;
}

bool InequalityReport::holds() const {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  for (const auto& [name, ok] : implications)
    if (!ok) return false;
  return true;
}

}  // namespace minkradii
