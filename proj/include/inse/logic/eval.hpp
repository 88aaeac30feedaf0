#pragma once

#include "inse/logic/ast.hpp"
#include "inse/triple.hpp"

#include <map>
#include <string>
#include <vector>

namespace inse::logic {

using Interpretation = std::map<std::string, InsTriple>;

// The triple treated as "designated true" (and its dual) when judging
// tautology and when evaluating the Truth/Falsity constants. Propositional
// and predicate logic use different default conventions, so the convention
// travels with every verdict.
struct DesignatedConvention {
  InsTriple truth;
  InsTriple falsity;
};

inline DesignatedConvention prop_convention() {
  return {InsTriple(1.0, 0.0, 0.0), InsTriple(0.0, 1.0, 1.0)};
}

inline DesignatedConvention pred_convention() {
  return {InsTriple(1.0, 1.0, 0.0), InsTriple(0.0, 0.0, 1.0)};
}

// Table-of-four-connectives evaluation:
//   not p   -> <f, 1-i, t>
//   p and q -> <min t, max i, max f>
//   p or q  -> <max t, min i, min f>
//   p -> q  -> <min(1, 1-t(p)+t(q)), max(0, i(q)-i(p)), max(0, f(q)-f(p))>
// and p <-> q evaluated as (p -> q) and (q -> p).
InsTriple eval_prop(const PropPtr& f, const Interpretation& m,
                    const DesignatedConvention& conv = prop_convention());

struct PredTable {
  int arity{0};
  std::map<std::vector<int>, InsTriple> rows;  // total on D^arity
};

struct FuncTable {
  int arity{0};
  std::map<std::vector<int>, int> rows;  // total on D^arity, values in D
};

// Finite first-order model: domain elements are strings, predicate and
// function symbols get total tables over element indices.
struct FiniteModel {
  std::vector<std::string> domain;
  std::map<std::string, int> constants;
  std::map<std::string, PredTable> predicates;
  std::map<std::string, FuncTable> functions;

  int element_index(const std::string& name) const;
};

using Env = std::map<std::string, int>;  // variable -> domain element index

// Quantifiers per the predicate table: forall = <min t, min i, max f> and
// exists = <max t, max i, min f> over the domain, endpoint-wise.
InsTriple eval_pred(const PredPtr& f, const FiniteModel& m, const Env& env = {},
                    const DesignatedConvention& conv = pred_convention());

} // namespace inse::logic
