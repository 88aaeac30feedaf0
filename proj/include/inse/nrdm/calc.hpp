#pragma once

#include "inse/nrdm/algebra.hpp"

#include <memory>

namespace inse::nrdm {

// Infinite-valued tuple calculus over a database of named relations.
struct CalcFormula;
using CalcPtr = std::shared_ptr<const CalcFormula>;

struct CalcOperand {
  bool is_attr{false};
  std::string var;   // tuple variable (attr form)
  std::string text;  // attribute name or constant literal

  static CalcOperand attr(std::string v, std::string a) { return {true, std::move(v), std::move(a)}; }
  static CalcOperand constant(std::string c) { return {false, {}, std::move(c)}; }
};

struct CalcFormula {
  enum class Kind { Membership, Compare, Not, And, Or, Exists, Forall };
  Kind kind;
  std::string var;       // Membership / quantifiers: tuple variable
  std::string relation;  // Membership
  Scheme scheme;         // quantifiers: the bound variable's scheme
  CmpOp op{};            // Compare
  CalcOperand lhs_op, rhs_op;
  CalcPtr lhs, rhs;  // Not uses lhs; quantifiers use lhs as body
};

CalcPtr calc_membership(std::string var, std::string relation);
CalcPtr calc_compare(CmpOp op, CalcOperand l, CalcOperand r);
CalcPtr calc_not(CalcPtr f);
CalcPtr calc_and(CalcPtr a, CalcPtr b);
CalcPtr calc_or(CalcPtr a, CalcPtr b);
CalcPtr calc_exists(std::string var, Scheme s, CalcPtr body);
CalcPtr calc_forall(std::string var, Scheme s, CalcPtr body);

// Infinite-valued connectives on condition values.
inline ConfidencePair cp_not(const ConfidencePair& a) { return {a.doubt, a.belief}; }
inline ConfidencePair cp_and(const ConfidencePair& a, const ConfidencePair& b) {
  return {std::min(a.belief, b.belief), std::max(a.doubt, b.doubt)};
}
inline ConfidencePair cp_or(const ConfidencePair& a, const ConfidencePair& b) {
  return {std::max(a.belief, b.belief), std::min(a.doubt, b.doubt)};
}

struct CalcDatabase {
  std::map<std::string, NeutroRelation> relations;
};

enum class QuantifierRange { active, full };

struct CalcConfig {
  QuantifierRange range{QuantifierRange::active};
  std::size_t max_tuples{1u << 20};  // guard for full-range quantification
};

struct CalcEnv {
  std::map<std::string, std::pair<const Scheme*, Tuple>> bound;
};

ConfidencePair tc_eval(const CalcPtr& f, const CalcDatabase& db, const CalcEnv& env,
                       const CalcConfig& cfg = {});

// { t of Scheme | P(t) }: materializes the relation whose membership function
// is P over the declared tuple space, dropping <0,0> rows.
NeutroRelation tc_query(const std::string& var, const Scheme& scheme, const CalcPtr& body,
                        const CalcDatabase& db, const CalcConfig& cfg = {});

// Syntax: { d of (I:Item) | exists t of (I:Item, Q:Cat) . (t.I = d.I and t in EVAL) }
// Domains are resolved against the catalog; connectives are not/and/or with
// the usual precedence and parentheses.
struct DomainCatalog {
  std::map<std::string, DomainPtr> domains;
};

struct CalcQuery {
  std::string var;
  Scheme scheme;
  CalcPtr body;
};

CalcQuery parse_calc_query(const std::string& text, const DomainCatalog& catalog);

} // namespace inse::nrdm
