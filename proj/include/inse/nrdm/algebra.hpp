#pragma once

#include "inse/nrdm/core.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace inse::nrdm {

// Two-valued guard predicates for selection: comparisons over attribute
// values and constants, closed under not/and/or.
struct GuardExpr;
using GuardPtr = std::shared_ptr<const GuardExpr>;

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct GuardOperand {
  bool is_attr{false};
  std::string text;  // attribute name or constant literal

  static GuardOperand attr(std::string a) { return {true, std::move(a)}; }
  static GuardOperand constant(std::string c) { return {false, std::move(c)}; }
};

struct GuardExpr {
  enum class Kind { Cmp, Not, And, Or };
  Kind kind;
  CmpOp op{};
  GuardOperand lhs_op, rhs_op;
  GuardPtr lhs, rhs;
};

GuardPtr guard_cmp(CmpOp op, GuardOperand l, GuardOperand r);
GuardPtr guard_not(GuardPtr g);
GuardPtr guard_and(GuardPtr a, GuardPtr b);
GuardPtr guard_or(GuardPtr a, GuardPtr b);
GuardPtr guard_true();

bool guard_eval(const GuardPtr& g, const Scheme& s, const Tuple& t);
void guard_check(const GuardPtr& g, const Scheme& s);  // errors when ill-typed
bool compare_values(CmpOp op, const std::string& a, const std::string& b);

// Range over which projection extensions quantify: the full declared tuple
// space with absent tuples as <0,0>, or only the stored support.
enum class ExtensionRange { declared, stored };

// Generalized set-theoretic operators over the union of stored supports.
// They require non-inconsistent input (split first, or use the with_split
// helpers below).
NeutroRelation n_union(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation n_complement(const NeutroRelation& r);
NeutroRelation n_intersect(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation n_difference(const NeutroRelation& r, const NeutroRelation& s);

// Natural join on the merged scheme; candidate tuples are those whose
// projection onto at least one argument is stored.
NeutroRelation n_join(const NeutroRelation& r, const NeutroRelation& s);

NeutroRelation n_project(const NeutroRelation& r, const std::vector<std::string>& attrs,
                         ExtensionRange range = ExtensionRange::declared);

// Satisfying tuples keep their pair, non-satisfying ones get <0,1>; the
// result therefore materializes over the full tuple space.
NeutroRelation n_select_guard(const NeutroRelation& r, const GuardPtr& guard);

// The same operators on pseudo-consistent multi-relations, acting row-wise.
MultiRelation m_union(const MultiRelation& r, const MultiRelation& s);
MultiRelation m_complement(const MultiRelation& r);
MultiRelation m_intersect(const MultiRelation& r, const MultiRelation& s);
MultiRelation m_difference(const MultiRelation& r, const MultiRelation& s);
MultiRelation m_join(const MultiRelation& r, const MultiRelation& s);
NeutroRelation m_project(const MultiRelation& r, const std::vector<std::string>& attrs,
                         ExtensionRange range = ExtensionRange::declared);
MultiRelation m_select_guard(const MultiRelation& r, const GuardPtr& guard);

// split -> operate -> combine protocol for arbitrary (possibly inconsistent)
// inputs.
NeutroRelation with_split_union(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation with_split_intersect(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation with_split_difference(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation with_split_join(const NeutroRelation& r, const NeutroRelation& s);
NeutroRelation with_split_project(const NeutroRelation& r, const std::vector<std::string>& attrs,
                                  ExtensionRange range = ExtensionRange::declared);

// Classical fuzzy-relational operators on dense total relations; these are
// the reference operators for the strong-generalization oracle.
FuzzyRelation f_union(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation f_complement(const FuzzyRelation& r);
FuzzyRelation f_intersect(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation f_difference(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation f_join(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation f_project(const FuzzyRelation& r, const std::vector<std::string>& attrs);
FuzzyRelation f_select(const FuzzyRelation& r, const GuardPtr& guard);

// Name-dispatched entry point matching the operator catalog.
FuzzyRelation fuzzy_apply(const std::string& op, const std::vector<FuzzyRelation>& args,
                          const std::vector<std::string>& attrs = {},
                          const GuardPtr& guard = nullptr);

Scheme join_scheme(const Scheme& a, const Scheme& b);
Scheme project_scheme(const Scheme& s, const std::vector<std::string>& attrs);

} // namespace inse::nrdm
